#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "leavitt/cohn.hpp"
#include "leavitt/error.hpp"
#include "leavitt/leavitt.hpp"

namespace leavitt {

/// Dense d x d matrix over CohnElement or LeavittElement entries.
template <class Entry> class Matrix {
public:
  /// The zero matrix of size d over the algebra (spec, n).
  Matrix(std::size_t d, FieldSpec spec, std::uint32_t n)
      : d_(d), spec_(spec), n_(n) {
    if (d == 0)
      throw DomainError("matrix size must be at least 1");
    entries_.assign(d * d, Entry(spec, n));
  }

  static Matrix identity(std::size_t d, FieldSpec spec, std::uint32_t n) {
    Matrix m(d, spec, n);
    for (std::size_t i = 0; i < d; ++i)
      m.at(i, i) = Entry::one(spec, n);
    return m;
  }

  /// \p e on the diagonal.
  static Matrix diagonal(std::size_t d, const Entry &e) {
    Matrix m(d, e.spec(), e.alphabet());
    for (std::size_t i = 0; i < d; ++i)
      m.at(i, i) = e;
    return m;
  }

  /// The matrix with \p e in entry (i, j), 1-based, and zero elsewhere.
  static Matrix unit(const Entry &e, std::size_t i, std::size_t j,
                     std::size_t d) {
    if (i < 1 || i > d || j < 1 || j > d)
      throw DomainError("matrix unit index (" + std::to_string(i) + "," +
                        std::to_string(j) + ") outside [1, " +
                        std::to_string(d) + "]");
    Matrix m(d, e.spec(), e.alphabet());
    m.at(i - 1, j - 1) = e;
    return m;
  }

  std::size_t size() const noexcept { return d_; }
  const FieldSpec &spec() const noexcept { return spec_; }
  std::uint32_t alphabet() const noexcept { return n_; }

  /// 0-based access.
  const Entry &at(std::size_t i, std::size_t j) const {
    return entries_[i * d_ + j];
  }

  /// Entries must stay in the matrix's algebra; set() enforces that.
  Entry &at(std::size_t i, std::size_t j) { return entries_[i * d_ + j]; }

  void set(std::size_t i, std::size_t j, Entry e) {
    if (e.spec() != spec_ || e.alphabet() != n_)
      throw MismatchError("matrix entry lives in a different algebra");
    at(i, j) = std::move(e);
  }

  bool is_zero() const {
    for (const auto &e : entries_) {
      if (!e.is_zero())
        return false;
    }
    return true;
  }

  void check_compatible(const Matrix &b) const {
    if (d_ != b.d_)
      throw MismatchError("matrix size mismatch: " + std::to_string(d_) +
                          " vs " + std::to_string(b.d_));
    if (spec_ != b.spec_ || n_ != b.n_)
      throw MismatchError("matrix entries live in different algebras");
  }

  Matrix &operator+=(const Matrix &b) {
    check_compatible(b);
    for (std::size_t k = 0; k < entries_.size(); ++k)
      entries_[k] += b.entries_[k];
    return *this;
  }

  Matrix &operator-=(const Matrix &b) {
    check_compatible(b);
    for (std::size_t k = 0; k < entries_.size(); ++k)
      entries_[k] -= b.entries_[k];
    return *this;
  }

  Matrix &operator*=(const Scalar &s) {
    for (auto &e : entries_)
      e *= s;
    return *this;
  }

  friend Matrix operator+(Matrix a, const Matrix &b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix &b) { return a -= b; }
  friend Matrix operator*(const Scalar &s, Matrix a) { return a *= s; }

  friend Matrix operator*(const Matrix &a, const Matrix &b) {
    a.check_compatible(b);
    Matrix r(a.d_, a.spec_, a.n_);
    for (std::size_t i = 0; i < a.d_; ++i) {
      for (std::size_t k = 0; k < a.d_; ++k) {
        const Entry &aik = a.at(i, k);
        if (aik.is_zero())
          continue;
        for (std::size_t j = 0; j < a.d_; ++j) {
          if (!b.at(k, j).is_zero())
            r.at(i, j) += aik * b.at(k, j);
        }
      }
    }
    return r;
  }

  friend bool operator==(const Matrix &, const Matrix &) = default;

private:
  std::size_t d_;
  FieldSpec spec_;
  std::uint32_t n_;
  std::vector<Entry> entries_;
};

using CohnMatrix = Matrix<CohnElement>;
using LeavittMatrix = Matrix<LeavittElement>;

template <class Entry>
Matrix<Entry> mat_add(const Matrix<Entry> &a, const Matrix<Entry> &b) {
  return a + b;
}

template <class Entry>
Matrix<Entry> mat_mul(const Matrix<Entry> &a, const Matrix<Entry> &b) {
  return a * b;
}

template <class Entry>
Matrix<Entry> mat_bracket(const Matrix<Entry> &a, const Matrix<Entry> &b) {
  return a * b - b * a;
}

/// tr_d(B) = sum_i tr(B_ii) for any trace \p tr on the entry algebra.
template <class Entry, class Trace>
Scalar trace_d(const Matrix<Entry> &b, Trace &&tr) {
  Scalar t = Scalar::zero(b.spec());
  for (std::size_t i = 0; i < b.size(); ++i)
    t += tr(b.at(i, i));
  return t;
}

/// tau_d on M_d(L_K(n)). Throws DomainError unless char(K) | n - 1.
inline Scalar tau_d(const LeavittMatrix &b) {
  if (!tau_defined(b.spec(), b.alphabet()))
    throw DomainError("tau_d is undefined over " + b.spec().name() +
                      " for n = " + std::to_string(b.alphabet()) +
                      ": char(K) does not divide n-1");
  return trace_d(b, [](const LeavittElement &e) { return tau(e); });
}

} // namespace leavitt
