#include "dhyp/data_function.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "dhyp/errors.hpp"

namespace dhyp {

Sampler::Sampler(Fn fn, int max_order, bool regular)
    : fn_(std::move(fn)), max_order_(max_order), regular_(regular) {}

Sampler Sampler::values_only(std::function<double(double)> f, bool regular) {
  return Sampler([f = std::move(f)](double x, int) { return f(x); }, 0, regular);
}

double Sampler::derivative(double x, int order) const {
  if (order < 0 || order > max_order_)
    throw DerivativeUnavailable("sampler provides derivatives up to order " +
                                std::to_string(max_order_) + ", asked for " + std::to_string(order));
  return fn_(x, order);
}

Sampler reflected(const Sampler& f, double lo, double hi) {
  const double c = lo + hi;
  return Sampler([f, c](double x, int k) { return (k % 2 ? -1.0 : 1.0) * f.derivative(c - x, k); },
                 f.max_order(), f.regular());
}

Sampler shifted(const Sampler& f, double offset) {
  return Sampler([f, offset](double x, int k) { return f.derivative(x + offset, k); }, f.max_order(), f.regular());
}

namespace {

void require_params(const DataTerm& t, std::size_t n, const char* name) {
  if (t.params.size() != n)
    throw std::invalid_argument(std::string(name) + " expects " + std::to_string(n) + " parameters");
}

// k-th derivative in y of the bare term.
double term_derivative(const DataTerm& t, double y, int k) {
  const auto& p = t.params;
  switch (t.kind) {
    case DataKind::zero:
      return 0.0;
    case DataKind::polynomial: {
      double sum = 0.0;
      for (std::size_t i = p.size(); i-- > static_cast<std::size_t>(k);) {
        double falling = 1.0;
        for (int j = 0; j < k; ++j) falling *= static_cast<double>(i - j);
        sum = sum * y + p[i] * falling;
      }
      return sum;
    }
    case DataKind::sine:
    case DataKind::cosine: {
      const double base = t.kind == DataKind::sine ? 0.0 : 0.5 * std::numbers::pi;
      return p[0] * std::pow(p[1], k) * std::sin(p[1] * y + p[2] + base + 0.5 * k * std::numbers::pi);
    }
    case DataKind::exponential:
      return p[0] * std::pow(p[1], k) * std::exp(p[1] * y);
    case DataKind::power_shift: {
      double c = p[0];
      for (int j = 0; j < k; ++j) c *= (p[2] - j);
      if (c == 0.0) return 0.0;
      return c * std::pow(y - p[1], p[2] - k);
    }
  }
  return 0.0;
}

void validate(const DataTerm& t) {
  switch (t.kind) {
    case DataKind::zero: break;
    case DataKind::polynomial:
      if (t.params.empty()) throw std::invalid_argument("polynomial needs coefficients");
      break;
    case DataKind::sine: require_params(t, 3, "sine"); break;
    case DataKind::cosine: require_params(t, 3, "cosine"); break;
    case DataKind::exponential: require_params(t, 2, "exponential"); break;
    case DataKind::power_shift: require_params(t, 3, "power_shift"); break;
  }
}

const char* kind_name(DataKind k) {
  switch (k) {
    case DataKind::polynomial: return "polynomial";
    case DataKind::sine: return "sine";
    case DataKind::cosine: return "cosine";
    case DataKind::exponential: return "exponential";
    case DataKind::power_shift: return "power_shift";
    case DataKind::zero: return "zero";
  }
  return "?";
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t");
  return s.substr(b, e - b + 1);
}

DataTerm parse_term(const std::string& text) {
  const std::string s = trim(text);
  const auto colon = s.find(':');
  const std::string name = trim(s.substr(0, colon));
  DataTerm t;
  if (name == "zero") t.kind = DataKind::zero;
  else if (name == "polynomial") t.kind = DataKind::polynomial;
  else if (name == "sine") t.kind = DataKind::sine;
  else if (name == "cosine") t.kind = DataKind::cosine;
  else if (name == "exponential") t.kind = DataKind::exponential;
  else if (name == "power_shift") t.kind = DataKind::power_shift;
  else throw std::invalid_argument("unknown data function kind '" + name + "'");
  if (colon != std::string::npos) {
    std::stringstream list(s.substr(colon + 1));
    std::string item;
    while (std::getline(list, item, ',')) {
      std::size_t used = 0;
      const std::string v = trim(item);
      double value = 0.0;
      try {
        value = std::stod(v, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (v.empty() || used != v.size())
        throw std::invalid_argument("bad number '" + v + "' in data function '" + s + "'");
      t.params.push_back(value);
    }
  }
  validate(t);
  return t;
}

}  // namespace

DataFunction::DataFunction(DataTerm term) {
  validate(term);
  if (term.kind != DataKind::zero) terms_.push_back(std::move(term));
}

DataFunction DataFunction::constant(double c) { return polynomial({c}); }

DataFunction DataFunction::polynomial(std::vector<double> coefficients) {
  return DataFunction(DataTerm{DataKind::polynomial, std::move(coefficients)});
}

DataFunction DataFunction::parse(const std::string& spec) {
  if (trim(spec).empty()) throw std::invalid_argument("empty data function");
  return DataFunction(parse_term(spec));
}

double DataFunction::derivative(double x, int order) const {
  double sum = 0.0;
  for (const auto& t : terms_)
    sum += std::pow(t.scale, order) * term_derivative(t, t.scale * x + t.shift, order);
  return sum;
}

DataFunction DataFunction::composed_affine(double scale, double shift) const {
  DataFunction out = *this;
  for (auto& t : out.terms_) {
    t.shift += t.scale * shift;
    t.scale *= scale;
  }
  return out;
}

DataFunction DataFunction::reflected(double lo, double hi) const { return composed_affine(-1.0, lo + hi); }

DataFunction DataFunction::scaled(double c) const {
  DataFunction out = *this;
  for (auto& t : out.terms_) {
    if (t.kind == DataKind::polynomial)
      for (auto& v : t.params) v *= c;
    else if (t.kind != DataKind::zero)
      t.params[0] *= c;
  }
  return out;
}

DataFunction DataFunction::operator+(const DataFunction& other) const {
  DataFunction out = *this;
  out.terms_.insert(out.terms_.end(), other.terms_.begin(), other.terms_.end());
  return out;
}

bool DataFunction::is_zero() const {
  for (const auto& t : terms_) {
    if (t.kind == DataKind::zero) continue;
    if (t.kind == DataKind::polynomial) {
      for (double v : t.params)
        if (v != 0.0) return false;
      continue;
    }
    if (t.params[0] != 0.0) return false;
  }
  return true;
}

Sampler DataFunction::sampler() const {
  return Sampler([f = *this](double x, int k) { return f.derivative(x, k); }, 8);
}

std::string DataFunction::to_string() const {
  if (terms_.empty()) return "zero";
  std::ostringstream os;
  os.precision(17);
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    const auto& t = terms_[i];
    if (i) os << " + ";
    os << kind_name(t.kind);
    for (std::size_t j = 0; j < t.params.size(); ++j) os << (j ? ',' : ':') << t.params[j];
    if (t.scale != 1.0 || t.shift != 0.0) os << " @(" << t.scale << "x+" << t.shift << ")";
  }
  return os.str();
}

}  // namespace dhyp
