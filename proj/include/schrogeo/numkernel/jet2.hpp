#pragma once

// Second-order forward-mode jets: a value together with its gradient and
// Hessian with respect to the n chart coordinates. A jet of dimension 0 is a
// constant and combines with jets of any dimension.

#include <Eigen/Core>

#include <cmath>
#include <limits>
#include <ostream>

#include "schrogeo/errors.hpp"

namespace schrogeo {

class Jet2 {
 public:
  Jet2() = default;
  Jet2(double value) : value_(value) {}  // NOLINT: constants convert implicitly
  Jet2(double value, Eigen::VectorXd grad, Eigen::MatrixXd hess)
      : value_(value), grad_(std::move(grad)), hess_(std::move(hess)) {
    if (hess_.rows() != grad_.size() || hess_.cols() != grad_.size()) {
      throw ContractViolation("Jet2: Hessian shape does not match gradient length");
    }
    hess_ = (0.5 * (hess_ + hess_.transpose())).eval();
  }

  // The coordinate function x^index on an n-dimensional chart, at `value`.
  static Jet2 variable(double value, Eigen::Index index, Eigen::Index dim) {
    Jet2 j;
    j.value_ = value;
    j.grad_ = Eigen::VectorXd::Unit(dim, index);
    j.hess_ = Eigen::MatrixXd::Zero(dim, dim);
    return j;
  }

  double value() const { return value_; }
  Eigen::Index dim() const { return grad_.size(); }
  bool is_constant() const { return grad_.size() == 0; }

  // Gradient/Hessian padded to `n` when the jet is a constant.
  Eigen::VectorXd grad(Eigen::Index n) const {
    return is_constant() ? Eigen::VectorXd::Zero(n) : grad_;
  }
  Eigen::MatrixXd hess(Eigen::Index n) const {
    return is_constant() ? Eigen::MatrixXd::Zero(n, n) : hess_;
  }
  const Eigen::VectorXd& grad() const { return grad_; }
  const Eigen::MatrixXd& hess() const { return hess_; }

  Jet2& operator+=(const Jet2& o) {
    value_ += o.value_;
    if (!o.is_constant()) {
      if (is_constant()) {
        grad_ = o.grad_;
        hess_ = o.hess_;
      } else {
        check_dim(o);
        grad_ += o.grad_;
        hess_ += o.hess_;
      }
    }
    return *this;
  }
  Jet2& operator-=(const Jet2& o) {
    value_ -= o.value_;
    if (!o.is_constant()) {
      if (is_constant()) {
        grad_ = -o.grad_;
        hess_ = -o.hess_;
      } else {
        check_dim(o);
        grad_ -= o.grad_;
        hess_ -= o.hess_;
      }
    }
    return *this;
  }
  Jet2& operator*=(const Jet2& o) {
    *this = *this * o;
    return *this;
  }
  Jet2& operator/=(const Jet2& o) {
    *this = *this / o;
    return *this;
  }

  Jet2 operator-() const {
    Jet2 r;
    r.value_ = -value_;
    if (!is_constant()) {
      r.grad_ = -grad_;
      r.hess_ = -hess_;
    }
    return r;
  }

  friend Jet2 operator+(Jet2 a, const Jet2& b) { return a += b; }
  friend Jet2 operator-(Jet2 a, const Jet2& b) { return a -= b; }

  friend Jet2 operator*(const Jet2& a, const Jet2& b) {
    Jet2 r;
    r.value_ = a.value_ * b.value_;
    if (a.is_constant() && b.is_constant()) return r;
    if (a.is_constant()) {
      r.grad_ = a.value_ * b.grad_;
      r.hess_ = a.value_ * b.hess_;
      return r;
    }
    if (b.is_constant()) {
      r.grad_ = b.value_ * a.grad_;
      r.hess_ = b.value_ * a.hess_;
      return r;
    }
    a.check_dim(b);
    r.grad_ = a.value_ * b.grad_ + b.value_ * a.grad_;
    const Eigen::MatrixXd cross = a.grad_ * b.grad_.transpose();
    // Summing the symmetric parts separately keeps the result exactly symmetric.
    const Eigen::MatrixXd sym = cross + cross.transpose();
    r.hess_ = (a.value_ * b.hess_ + b.value_ * a.hess_) + sym;
    return r;
  }

  friend Jet2 operator/(const Jet2& a, const Jet2& b) {
    if (b.value_ == 0.0) throw JetSingularity("jet singularity: division by a jet with zero value");
    return a * b.reciprocal();
  }

  friend bool operator<(const Jet2& a, const Jet2& b) { return a.value_ < b.value_; }
  friend bool operator>(const Jet2& a, const Jet2& b) { return a.value_ > b.value_; }
  friend bool operator<=(const Jet2& a, const Jet2& b) { return a.value_ <= b.value_; }
  friend bool operator>=(const Jet2& a, const Jet2& b) { return a.value_ >= b.value_; }
  friend bool operator==(const Jet2& a, const Jet2& b) { return a.value_ == b.value_; }
  friend bool operator!=(const Jet2& a, const Jet2& b) { return a.value_ != b.value_; }

  // f(this) given f(v), f'(v), f''(v).
  Jet2 compose(double f, double df, double d2f) const {
    Jet2 r;
    r.value_ = f;
    if (!is_constant()) {
      r.grad_ = df * grad_;
      const Eigen::MatrixXd outer = d2f * grad_ * grad_.transpose();
      r.hess_ = df * hess_ + outer;
    }
    return r;
  }

  Jet2 reciprocal() const {
    if (value_ == 0.0) throw JetSingularity("jet singularity: reciprocal of a jet with zero value");
    const double inv = 1.0 / value_;
    return compose(inv, -inv * inv, 2.0 * inv * inv * inv);
  }

 private:
  void check_dim(const Jet2& o) const {
    if (o.grad_.size() != grad_.size()) {
      throw ContractViolation("Jet2: operands have different chart dimensions");
    }
  }

  double value_ = 0.0;
  Eigen::VectorXd grad_;
  Eigen::MatrixXd hess_;
};

inline Jet2 exp(const Jet2& a) {
  const double e = std::exp(a.value());
  return a.compose(e, e, e);
}
inline Jet2 log(const Jet2& a) {
  if (a.value() <= 0.0) throw JetSingularity("jet singularity: log of a non-positive jet");
  const double v = a.value();
  return a.compose(std::log(v), 1.0 / v, -1.0 / (v * v));
}
inline Jet2 sin(const Jet2& a) {
  const double s = std::sin(a.value()), c = std::cos(a.value());
  return a.compose(s, c, -s);
}
inline Jet2 cos(const Jet2& a) {
  const double s = std::sin(a.value()), c = std::cos(a.value());
  return a.compose(c, -s, -c);
}
inline Jet2 sqrt(const Jet2& a) {
  if (a.value() <= 0.0) throw JetSingularity("jet singularity: sqrt of a non-positive jet");
  const double s = std::sqrt(a.value());
  return a.compose(s, 0.5 / s, -0.25 / (s * a.value()));
}
inline Jet2 pow(const Jet2& a, double p) {
  const double v = a.value();
  if (v <= 0.0 && p != std::floor(p)) {
    throw JetSingularity("jet singularity: fractional power of a non-positive jet");
  }
  return a.compose(std::pow(v, p), p * std::pow(v, p - 1.0), p * (p - 1.0) * std::pow(v, p - 2.0));
}
inline Jet2 abs(const Jet2& a) { return a.value() < 0.0 ? -a : a; }
inline bool isfinite(const Jet2& a) { return std::isfinite(a.value()); }

inline std::ostream& operator<<(std::ostream& os, const Jet2& j) {
  return os << "Jet2(" << j.value() << ")";
}

// Uniform access to the real value of a double or a jet.
inline double value_of(double x) { return x; }
inline double value_of(const Jet2& x) { return x.value(); }

}  // namespace schrogeo

namespace Eigen {

template <>
struct NumTraits<schrogeo::Jet2> : GenericNumTraits<schrogeo::Jet2> {
  using Real = schrogeo::Jet2;
  using NonInteger = schrogeo::Jet2;
  using Nested = schrogeo::Jet2;
  using Literal = double;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 8,
    AddCost = 16,
    MulCost = 32,
  };
  static inline Real epsilon() { return Real(std::numeric_limits<double>::epsilon()); }
  static inline Real dummy_precision() { return Real(1e-12); }
  static inline Real highest() { return Real(std::numeric_limits<double>::max()); }
  static inline Real lowest() { return Real(std::numeric_limits<double>::lowest()); }
  static inline int digits10() { return std::numeric_limits<double>::digits10; }
};

template <typename BinaryOp>
struct ScalarBinaryOpTraits<schrogeo::Jet2, double, BinaryOp> {
  using ReturnType = schrogeo::Jet2;
};
template <typename BinaryOp>
struct ScalarBinaryOpTraits<double, schrogeo::Jet2, BinaryOp> {
  using ReturnType = schrogeo::Jet2;
};

}  // namespace Eigen

namespace schrogeo {

template <typename Scalar>
using VecX = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;
template <typename Scalar>
using MatX = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

// Seeds every coordinate of `p` as an independent jet variable.
inline VecX<Jet2> seed_jets(const Eigen::VectorXd& p) {
  VecX<Jet2> out(p.size());
  for (Eigen::Index i = 0; i < p.size(); ++i) out[i] = Jet2::variable(p[i], i, p.size());
  return out;
}

}  // namespace schrogeo
