#include "gstone/field.hpp"

#include <algorithm>

#include "gstone/errors.hpp"

namespace gstone {

Field Field::gf(int p) {
  if (p < 2 || p > 97) {
    throw InputError("field: prime order must lie in [2, 97]");
  }
  for (int d = 2; d * d <= p; ++d) {
    if (p % d == 0) {
      throw InputError("field: " + std::to_string(p) + " is not prime");
    }
  }
  return Field(p);
}

Field Field::parse(const std::string& name) {
  if (name == "Q" || name == "q") return rationals();
  std::string digits = name;
  if (digits.rfind("F_", 0) == 0) {
    digits = digits.substr(2);
  } else if (digits.rfind("F", 0) == 0) {
    digits = digits.substr(1);
  } else {
    throw InputError("field: cannot parse '" + name + "' (use Q or F<p>)");
  }
  try {
    std::size_t used = 0;
    const int p = std::stoi(digits, &used);
    if (used != digits.size()) throw std::invalid_argument(digits);
    return gf(p);
  } catch (const std::exception&) {
    throw InputError("field: cannot parse '" + name + "' (use Q or F<p>)");
  }
}

Field::Elem Field::reduce(const Elem& a) const {
  if (p_ == 0) {
    Elem out = a;
    out.canonicalize();
    return out;
  }
  // prime-field elements are integers; reduce to the canonical residue
  Elem canon = a;
  canon.canonicalize();
  if (canon.get_den() != 1) {
    // clear the denominator with its inverse mod p
    Elem den(canon.get_den());
    canon = Elem(canon.get_num()) * inv(den);
    canon.canonicalize();
  }
  mpz_class num = canon.get_num();
  mpz_class r = num % p_;
  if (r < 0) r += p_;
  return Elem(r);
}

Field::Elem Field::inv(const Elem& a) const {
  if (is_zero(a)) throw InputError("field: division by zero");
  if (p_ == 0) {
    Elem out = 1 / a;
    out.canonicalize();
    return out;
  }
  const Elem canon = reduce(a);
  mpz_class result;
  mpz_class num = canon.get_num();
  mpz_class mod(p_);
  if (mpz_invert(result.get_mpz_t(), num.get_mpz_t(), mod.get_mpz_t()) == 0) {
    throw InputError("field: element has no inverse");
  }
  return Elem(result);
}

bool RowSpace::insert(Vec v) {
  if (static_cast<int>(v.size()) != dim_) {
    throw InputError("row space: vector has the wrong dimension");
  }
  reduce(v);
  int pivot = -1;
  for (int i = 0; i < dim_; ++i) {
    if (!field_.is_zero(v[i])) {
      pivot = i;
      break;
    }
  }
  if (pivot < 0) return false;
  const Field::Elem scale = field_.inv(v[pivot]);
  for (auto& x : v) x = field_.mul(x, scale);
  // back-substitute into the existing rows
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    const Field::Elem c = field_.reduce(rows_[r][pivot]);
    if (field_.is_zero(c)) continue;
    for (int i = 0; i < dim_; ++i) {
      rows_[r][i] = field_.sub(rows_[r][i], field_.mul(c, v[i]));
    }
  }
  auto it = std::lower_bound(pivot_.begin(), pivot_.end(), pivot);
  const std::size_t at = it - pivot_.begin();
  pivot_.insert(it, pivot);
  rows_.insert(rows_.begin() + at, std::move(v));
  return true;
}

void RowSpace::reduce(Vec& v) const {
  if (static_cast<int>(v.size()) != dim_) {
    throw InputError("row space: vector has the wrong dimension");
  }
  for (int i = 0; i < dim_; ++i) v[i] = field_.reduce(v[i]);
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    const Field::Elem c = v[pivot_[r]];
    if (field_.is_zero(c)) continue;
    for (int i = 0; i < dim_; ++i) {
      v[i] = field_.sub(v[i], field_.mul(c, rows_[r][i]));
    }
  }
}

bool RowSpace::contains(Vec v) const {
  reduce(v);
  return std::all_of(v.begin(), v.end(),
                     [&](const Field::Elem& x) { return field_.is_zero(x); });
}

}  // namespace gstone
