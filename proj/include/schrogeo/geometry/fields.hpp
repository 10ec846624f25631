#pragma once

// Chart-based fields. Every field is stored twice, as a double evaluator and
// as a Jet2 evaluator, both produced from one generic callable so the two can
// never disagree:
//
//   auto m = MetricField::from(chart, {2, 1}, [](const auto& p) {
//     using S = typename std::decay_t<decltype(p)>::Scalar;
//     ...
//   });

#include <Eigen/Core>

#include <functional>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "schrogeo/numkernel/jet2.hpp"

namespace schrogeo {

// Enables the forwarding overloads below for fixed-size or expression
// arguments with double entries.
template <typename Derived>
using IfDouble = std::enable_if_t<std::is_same_v<typename Derived::Scalar, double>, int>;

class Chart {
 public:
  using Predicate = std::function<bool(const Eigen::VectorXd&)>;

  explicit Chart(std::vector<std::string> names, Predicate singular = {});

  Eigen::Index dim() const { return static_cast<Eigen::Index>(names_.size()); }
  const std::vector<std::string>& names() const { return names_; }
  Eigen::Index index_of(const std::string& name) const;
  bool is_singular(const Eigen::VectorXd& p) const { return singular_ && singular_(p); }

  // (x1..xd, t, s)
  static Chart bargmann(int d);
  // (x1..xd, t, s, r); singular on |r| <= 1e-12
  static Chart bulk(int d);

 private:
  std::vector<std::string> names_;
  Predicate singular_;
};

struct Signature {
  int pluses = 0;
  int minuses = 0;
};

class ScalarField {
 public:
  using F64 = std::function<double(const Eigen::VectorXd&)>;
  using FJet = std::function<Jet2(const VecX<Jet2>&)>;

  ScalarField() = default;
  ScalarField(F64 f, FJet j) : f64_(std::move(f)), jet_(std::move(j)) {}

  template <typename Generic>
  static ScalarField from(Generic g) {
    return ScalarField([g](const Eigen::VectorXd& p) { return g(p); },
                       [g](const VecX<Jet2>& p) { return g(p); });
  }
  static ScalarField constant(double c) {
    return from([c](const auto& p) {
      using S = typename std::decay_t<decltype(p)>::Scalar;
      return S(c);
    });
  }

  double operator()(const Eigen::VectorXd& p) const { return f64_(p); }
  Jet2 operator()(const VecX<Jet2>& p) const { return jet_(p); }
  template <typename Derived, IfDouble<Derived> = 0>
  double operator()(const Eigen::MatrixBase<Derived>& p) const { return f64_(p.eval()); }
  Jet2 jet_at(const Eigen::VectorXd& p) const { return jet_(seed_jets(p)); }
  explicit operator bool() const { return static_cast<bool>(f64_); }

 private:
  F64 f64_;
  FJet jet_;
};

// Shared machinery for vector-valued fields (vector fields and one-forms are
// distinct types over the same representation).
template <typename Tag>
class ComponentField {
 public:
  using F64 = std::function<Eigen::VectorXd(const Eigen::VectorXd&)>;
  using FJet = std::function<VecX<Jet2>(const VecX<Jet2>&)>;

  ComponentField() = default;
  ComponentField(F64 f, FJet j) : f64_(std::move(f)), jet_(std::move(j)) {}

  template <typename Generic>
  static ComponentField from(Generic g) {
    return ComponentField([g](const Eigen::VectorXd& p) -> Eigen::VectorXd { return g(p); },
                          [g](const VecX<Jet2>& p) -> VecX<Jet2> { return g(p); });
  }
  static ComponentField constant(Eigen::VectorXd c) {
    return from([c](const auto& p) {
      using S = typename std::decay_t<decltype(p)>::Scalar;
      return VecX<S>(c.template cast<S>());
    });
  }

  Eigen::VectorXd operator()(const Eigen::VectorXd& p) const { return f64_(p); }
  VecX<Jet2> operator()(const VecX<Jet2>& p) const { return jet_(p); }
  template <typename Derived, IfDouble<Derived> = 0>
  Eigen::VectorXd operator()(const Eigen::MatrixBase<Derived>& p) const { return f64_(p.eval()); }
  VecX<Jet2> jet_at(const Eigen::VectorXd& p) const { return jet_(seed_jets(p)); }
  explicit operator bool() const { return static_cast<bool>(f64_); }

  // First derivatives: row a holds d_a of every component, J(a, i) = d_a w_i.
  Eigen::MatrixXd first_derivatives(const Eigen::VectorXd& p) const;

 private:
  F64 f64_;
  FJet jet_;
};

struct VectorTag {};
struct OneFormTag {};
using VectorField = ComponentField<VectorTag>;
using OneForm = ComponentField<OneFormTag>;

class MetricField {
 public:
  using F64 = std::function<Eigen::MatrixXd(const Eigen::VectorXd&)>;
  using FJet = std::function<MatX<Jet2>(const VecX<Jet2>&)>;

  MetricField(Chart chart, Signature signature, F64 f, FJet j)
      : chart_(std::move(chart)), signature_(signature), f64_(std::move(f)), jet_(std::move(j)) {}

  template <typename Generic>
  static MetricField from(Chart chart, Signature signature, Generic g) {
    return MetricField(
        std::move(chart), signature,
        [g](const Eigen::VectorXd& p) -> Eigen::MatrixXd { return g(p); },
        [g](const VecX<Jet2>& p) -> MatX<Jet2> { return g(p); });
  }

  const Chart& chart() const { return chart_; }
  Signature signature() const { return signature_; }
  Eigen::Index dim() const { return chart_.dim(); }

  Eigen::MatrixXd gram(const Eigen::VectorXd& p) const { return f64_(p); }
  MatX<Jet2> gram(const VecX<Jet2>& p) const { return jet_(p); }
  template <typename Derived, IfDouble<Derived> = 0>
  Eigen::MatrixXd gram(const Eigen::MatrixBase<Derived>& p) const { return f64_(p.eval()); }

  // Omega^2 * g for a positive conformal factor Omega.
  MetricField rescaled(const ScalarField& omega) const;

 private:
  Chart chart_;
  Signature signature_;
  F64 f64_;
  FJet jet_;
};

template <typename Tag>
Eigen::MatrixXd ComponentField<Tag>::first_derivatives(const Eigen::VectorXd& p) const {
  const VecX<Jet2> w = jet_at(p);
  const Eigen::Index n = p.size();
  Eigen::MatrixXd jac(n, w.size());
  for (Eigen::Index i = 0; i < w.size(); ++i) jac.col(i) = w[i].grad(n);
  return jac;
}

}  // namespace schrogeo
