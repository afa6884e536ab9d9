#include "chowsym/smith.hpp"

#include <algorithm>

namespace chowsym {

namespace {

void add_row_multiple(IntMatrix& a, std::size_t dst, std::size_t src, const BigInt& f) {
  for (std::size_t c = 0; c < a.cols(); ++c) a(dst, c) += f * a(src, c);
}

void add_col_multiple(IntMatrix& a, std::size_t dst, std::size_t src, const BigInt& f) {
  for (std::size_t r = 0; r < a.rows(); ++r) a(r, dst) += f * a(r, src);
}

class Reducer {
 public:
  explicit Reducer(const IntMatrix& m)
      : d_(m), u_(IntMatrix::identity(m.rows())), v_(IntMatrix::identity(m.cols())) {}

  SmithDecomposition run() {
    const std::size_t limit = std::min(d_.rows(), d_.cols());
    for (std::size_t t = 0; t < limit; ++t) {
      if (!bring_pivot(t)) break;
      for (;;) {
        clear_row_and_column(t);
        if (!fix_divisibility(t)) break;
      }
      if (sgn(d_(t, t)) < 0) negate_row(t);
    }
    SmithDecomposition out{d_, u_, v_, {}};
    for (std::size_t t = 0; t < limit; ++t) {
      if (sgn(d_(t, t)) != 0) out.invariant_factors.push_back(d_(t, t));
    }
    return out;
  }

 private:
  // Moves the nonzero entry of smallest magnitude in the trailing block to (t, t).
  bool bring_pivot(std::size_t t) {
    bool found = false;
    std::size_t pr = t;
    std::size_t pc = t;
    for (std::size_t r = t; r < d_.rows(); ++r) {
      for (std::size_t c = t; c < d_.cols(); ++c) {
        if (sgn(d_(r, c)) == 0) continue;
        if (!found || abs(d_(r, c)) < abs(d_(pr, pc))) {
          found = true;
          pr = r;
          pc = c;
        }
      }
    }
    if (!found) return false;
    d_.swap_rows(t, pr);
    u_.swap_rows(t, pr);
    d_.swap_cols(t, pc);
    v_.swap_cols(t, pc);
    return true;
  }

  // Euclid-style: subtract nearest-quotient multiples of the pivot row and
  // column, then move the smallest surviving entry of row/column t onto the
  // pivot. Keeps entries far smaller than Bezout row mixing on dense input.
  void clear_row_and_column(std::size_t t) {
    for (;;) {
      for (std::size_t i = t + 1; i < d_.rows(); ++i) {
        if (sgn(d_(i, t)) == 0) continue;
        const BigInt f = -nearest_quotient(d_(i, t), d_(t, t));
        add_row_multiple(d_, i, t, f);
        add_row_multiple(u_, i, t, f);
      }
      for (std::size_t j = t + 1; j < d_.cols(); ++j) {
        if (sgn(d_(t, j)) == 0) continue;
        const BigInt f = -nearest_quotient(d_(t, j), d_(t, t));
        add_col_multiple(d_, j, t, f);
        add_col_multiple(v_, j, t, f);
      }
      std::size_t best_row = t;
      std::size_t best_col = t;
      for (std::size_t i = t + 1; i < d_.rows(); ++i) {
        if (sgn(d_(i, t)) != 0 && (best_row == t || abs(d_(i, t)) < abs(d_(best_row, t)))) best_row = i;
      }
      for (std::size_t j = t + 1; j < d_.cols(); ++j) {
        if (sgn(d_(t, j)) != 0 && (best_col == t || abs(d_(t, j)) < abs(d_(t, best_col)))) best_col = j;
      }
      if (best_row == t && best_col == t) return;
      // Remainders are strictly smaller than the pivot, so either swap shrinks it.
      if (best_row != t) {
        d_.swap_rows(t, best_row);
        u_.swap_rows(t, best_row);
      } else {
        d_.swap_cols(t, best_col);
        v_.swap_cols(t, best_col);
      }
    }
  }

  static BigInt nearest_quotient(const BigInt& n, const BigInt& d) {
    BigInt q;
    BigInt twice = 2 * n + d;  // floor((2n + d) / 2d) = floor(n/d + 1/2)
    mpz_fdiv_q(q.get_mpz_t(), twice.get_mpz_t(), BigInt(2 * d).get_mpz_t());
    return q;
  }

  // If some trailing entry is not a multiple of the pivot, folds its row into
  // row t so the next elimination round lowers the pivot to a gcd.
  bool fix_divisibility(std::size_t t) {
    for (std::size_t i = t + 1; i < d_.rows(); ++i) {
      for (std::size_t j = t + 1; j < d_.cols(); ++j) {
        if (!divisible_p(d_(i, j), d_(t, t))) {
          add_row_multiple(d_, t, i, 1);
          add_row_multiple(u_, t, i, 1);
          return true;
        }
      }
    }
    return false;
  }

  void negate_row(std::size_t t) {
    for (std::size_t c = 0; c < d_.cols(); ++c) d_(t, c) = -d_(t, c);
    for (std::size_t c = 0; c < u_.cols(); ++c) u_(t, c) = -u_(t, c);
  }

  static bool divisible_p(const BigInt& n, const BigInt& d) {
    return mpz_divisible_p(n.get_mpz_t(), d.get_mpz_t()) != 0;
  }

  IntMatrix d_;
  IntMatrix u_;
  IntMatrix v_;
};

}  // namespace

SmithDecomposition smith_normal_form(const IntMatrix& m) { return Reducer(m).run(); }

}  // namespace chowsym
