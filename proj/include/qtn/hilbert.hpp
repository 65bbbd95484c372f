#pragma once

#include <memory>
#include <string>
#include <vector>

#include "qtn/matrix.hpp"

namespace qtn {

struct Subsystem {
  std::string label;
  Index dim = 0;
};

/// Ordered list of labelled finite-dimensional subsystems. The composite
/// space is their tensor product, in listing order; oscillators enter as
/// truncated Fock spaces of the stated dimension.
class HilbertSpec {
 public:
  static constexpr Index kDefaultDimCap = 4096;

  HilbertSpec() = default;
  explicit HilbertSpec(std::vector<Subsystem> subsystems, Index dim_cap = kDefaultDimCap);

  const std::vector<Subsystem>& subsystems() const { return subsystems_; }
  Index total_dim() const { return total_dim_; }
  Index index_of(const std::string& label) const;  // throws SchemaError on unknown label
  bool same_as(const HilbertSpec& other) const;

 private:
  std::vector<Subsystem> subsystems_;
  Index total_dim_ = 1;
};

/// Symbolic operator on a composite space: ladder/Pauli leaves on named
/// subsystems combined by sums, products, adjoints and scalar factors.
/// Conventions: a|n> = sqrt(n)|n-1> on a truncated Fock space (the
/// truncation defect of [a,a†] sits in the top level only);
/// pauli_lower = |0><1|, pauli_z = diag(-1,+1), both requiring dim 2.
class OperatorExpr {
 public:
  static OperatorExpr annihilation(std::string subsystem);
  static OperatorExpr creation(std::string subsystem);
  static OperatorExpr pauli_lower(std::string subsystem);
  static OperatorExpr pauli_z(std::string subsystem);
  static OperatorExpr identity();
  static OperatorExpr explicit_matrix(std::string subsystem, CMatrix local);
  static OperatorExpr scalar(Complex value);
  static OperatorExpr sum(std::vector<OperatorExpr> terms);
  static OperatorExpr product(std::vector<OperatorExpr> factors);
  static OperatorExpr adjoint(OperatorExpr inner);
  static OperatorExpr scale(Complex factor, OperatorExpr inner);

  /// Number operator a†a (or σ†σ) on the named subsystem.
  static OperatorExpr number(std::string subsystem);

  struct Node;
  const Node& node() const { return *node_; }

 private:
  explicit OperatorExpr(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

enum class OpKind {
  Annihilation,
  Creation,
  PauliLower,
  PauliZ,
  Identity,
  Explicit,
  Scalar,
  Sum,
  Product,
  Adjoint,
  Scale,
};

struct OperatorExpr::Node {
  OpKind kind;
  std::string subsystem;               // leaf ops
  CMatrix local;                       // Explicit
  Complex value{0.0, 0.0};             // Scalar / Scale
  std::vector<OperatorExpr> children;  // Sum / Product / Adjoint / Scale
};

/// Full tensor-product matrix of `expr` on `space` (identity on untouched
/// subsystems).
CMatrix embed(const OperatorExpr& expr, const HilbertSpec& space);

/// Truncated ladder matrix, a(n-1, n) = sqrt(n).
CMatrix annihilation_matrix(Index dim);

}  // namespace qtn
