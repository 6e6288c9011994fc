#ifndef GSTONE_FIELD_HPP_
#define GSTONE_FIELD_HPP_

#include <gmpxx.h>

#include <string>
#include <vector>

namespace gstone {

// Exact coefficient field: the rationals, or a prime field of order p <= 97
// represented by canonical residues. No floating point anywhere.
class Field {
 public:
  using Elem = mpq_class;

  static Field rationals() { return Field(0); }
  static Field gf(int p);
  static Field parse(const std::string& name);  // "Q", "F2", "F_2"

  bool is_rational() const { return p_ == 0; }
  int characteristic() const { return p_; }
  std::string name() const {
    return p_ == 0 ? "Q" : "F_" + std::to_string(p_);
  }

  Elem zero() const { return Elem(0); }
  Elem one() const { return Elem(1); }
  Elem reduce(const Elem& a) const;
  Elem add(const Elem& a, const Elem& b) const { return reduce(a + b); }
  Elem sub(const Elem& a, const Elem& b) const { return reduce(a - b); }
  Elem mul(const Elem& a, const Elem& b) const { return reduce(a * b); }
  Elem neg(const Elem& a) const { return reduce(-a); }
  Elem inv(const Elem& a) const;
  bool is_zero(const Elem& a) const { return reduce(a) == 0; }

  friend bool operator==(const Field&, const Field&) = default;

 private:
  explicit Field(int p) : p_(p) {}
  int p_;
};

using Vec = std::vector<Field::Elem>;

// Incremental reduced row echelon basis of a subspace.
class RowSpace {
 public:
  RowSpace(Field field, int dim) : field_(field), dim_(dim) {}

  // Reduces v against the basis; if a nonzero remainder is left, adds it
  // (normalised, with back-substitution) and returns true.
  bool insert(Vec v);
  void reduce(Vec& v) const;
  bool contains(Vec v) const;
  int rank() const { return static_cast<int>(rows_.size()); }
  int dim() const { return dim_; }
  const std::vector<Vec>& rows() const { return rows_; }
  const Field& field() const { return field_; }

 private:
  Field field_;
  int dim_;
  std::vector<Vec> rows_;   // sorted by pivot column
  std::vector<int> pivot_;
};

}  // namespace gstone

#endif  // GSTONE_FIELD_HPP_
