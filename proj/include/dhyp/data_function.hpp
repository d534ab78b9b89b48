#pragma once

#include <functional>
#include <string>
#include <vector>

namespace dhyp {

/// A real function on an interval with access to derivatives up to
/// max_order(). `regular` is false when the function is only Holder at the
/// interval ends, which tells integrators to grade toward them.
class Sampler {
 public:
  using Fn = std::function<double(double x, int order)>;

  Sampler() = default;
  Sampler(Fn fn, int max_order, bool regular = true);
  static Sampler values_only(std::function<double(double)> f, bool regular = true);

  double operator()(double x) const { return fn_(x, 0); }
  /// Throws DerivativeUnavailable for order > max_order().
  double derivative(double x, int order) const;
  int max_order() const { return max_order_; }
  bool regular() const { return regular_; }

 private:
  Fn fn_;
  int max_order_ = 0;
  bool regular_ = true;
};

/// x -> f(lo + hi - x), derivatives with the matching signs.
Sampler reflected(const Sampler& f, double lo, double hi);
/// x -> f(x + offset).
Sampler shifted(const Sampler& f, double offset);

enum class DataKind { polynomial, sine, cosine, exponential, power_shift, zero };

/// One catalog term evaluated at y = scale*x + shift:
///   polynomial  p = {c0, c1, ...}         sum c_i y^i
///   sine        p = {amp, freq, phase}    amp sin(freq y + phase)
///   cosine      p = {amp, freq, phase}    amp cos(freq y + phase)
///   exponential p = {amp, rate}           amp exp(rate y)
///   power_shift p = {amp, center, power}  amp (y - center)^power
///   zero        p = {}
struct DataTerm {
  DataKind kind = DataKind::zero;
  std::vector<double> params;
  double scale = 1.0;
  double shift = 0.0;
};

/// Sum of catalog terms with exact derivatives of any order.
class DataFunction {
 public:
  DataFunction() = default;
  explicit DataFunction(DataTerm term);

  static DataFunction zero() { return {}; }
  static DataFunction constant(double c);
  static DataFunction polynomial(std::vector<double> coefficients);

  /// Parses "polynomial:0,1,2", "sine:amp,freq,phase", "cosine:...",
  /// "exponential:amp,rate", "power_shift:amp,center,power" or "zero".
  /// Throws std::invalid_argument.
  static DataFunction parse(const std::string& spec);

  double operator()(double x) const { return derivative(x, 0); }
  double derivative(double x, int order) const;

  /// x -> f(lo + hi - x).
  DataFunction reflected(double lo, double hi) const;
  /// x -> f(scale*x + shift).
  DataFunction composed_affine(double scale, double shift) const;
  DataFunction scaled(double c) const;
  DataFunction operator+(const DataFunction& other) const;
  DataFunction operator-(const DataFunction& other) const { return *this + other.scaled(-1.0); }

  bool is_zero() const;
  const std::vector<DataTerm>& terms() const { return terms_; }
  Sampler sampler() const;
  std::string to_string() const;

 private:
  std::vector<DataTerm> terms_;
};

}  // namespace dhyp
