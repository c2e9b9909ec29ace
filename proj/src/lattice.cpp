#include "toric/lattice.hpp"

#include <numeric>
#include <ostream>
#include <sstream>
#include <utility>

namespace toric {

Int checked_add(Int a, Int b) {
    Int r;
    if (__builtin_add_overflow(a, b, &r)) throw OverflowError("integer overflow in addition");
    return r;
}

Int checked_sub(Int a, Int b) {
    Int r;
    if (__builtin_sub_overflow(a, b, &r)) throw OverflowError("integer overflow in subtraction");
    return r;
}

Int checked_mul(Int a, Int b) {
    Int r;
    if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("integer overflow in multiplication");
    return r;
}

Int checked_neg(Int a) { return checked_sub(0, a); }

Int binomial(Int n, Int k) {
    if (k < 0 || n < 0 || k > n) return 0;
    k = std::min(k, n - k);
    Int r = 1;
    for (Int i = 1; i <= k; ++i) {
        // r * (n - k + i) is divisible by i after the multiplication.
        r = checked_mul(r, n - k + i) / i;
    }
    return r;
}

bool LatticeVector::is_zero() const {
    for (Int x : coords_)
        if (x != 0) return false;
    return true;
}

Int LatticeVector::content() const {
    Int g = 0;
    for (Int x : coords_) g = std::gcd(g, x);
    return g;
}

static void require_same_dim(const LatticeVector& a, const LatticeVector& b) {
    if (a.dim() != b.dim()) throw InputError("lattice vector dimension mismatch");
}

LatticeVector& LatticeVector::operator+=(const LatticeVector& o) {
    require_same_dim(*this, o);
    for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] = checked_add(coords_[i], o.coords_[i]);
    return *this;
}

LatticeVector& LatticeVector::operator-=(const LatticeVector& o) {
    require_same_dim(*this, o);
    for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] = checked_sub(coords_[i], o.coords_[i]);
    return *this;
}

LatticeVector operator-(const LatticeVector& a) {
    LatticeVector r(a.dim());
    for (std::size_t i = 0; i < a.dim(); ++i) r[i] = checked_neg(a[i]);
    return r;
}

LatticeVector operator*(Int s, const LatticeVector& a) {
    LatticeVector r(a.dim());
    for (std::size_t i = 0; i < a.dim(); ++i) r[i] = checked_mul(s, a[i]);
    return r;
}

std::string LatticeVector::str() const {
    std::ostringstream os;
    os << *this;
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const LatticeVector& v) {
    os << '(';
    for (std::size_t i = 0; i < v.dim(); ++i) os << (i ? "," : "") << v[i];
    return os << ')';
}

Int dot(const LatticeVector& a, const LatticeVector& b) {
    require_same_dim(a, b);
    Int s = 0;
    for (std::size_t i = 0; i < a.dim(); ++i) s = checked_add(s, checked_mul(a[i], b[i]));
    return s;
}

namespace {

using Matrix = std::vector<std::vector<Int>>;

Matrix to_matrix(std::span<const LatticeVector> rows) {
    const std::size_t n = rows.size();
    Matrix m;
    m.reserve(n);
    for (const auto& r : rows) {
        if (r.dim() != n) throw InputError("determinant needs n vectors of dimension n");
        m.emplace_back(r.coords().begin(), r.coords().end());
    }
    return m;
}

// Bareiss elimination in place; returns the determinant.
Int bareiss(Matrix a) {
    const std::size_t n = a.size();
    if (n == 0) return 1;
    Int sign = 1;
    Int prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a[k][k] == 0) {
            std::size_t p = k + 1;
            while (p < n && a[p][k] == 0) ++p;
            if (p == n) return 0;
            std::swap(a[k], a[p]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                Int num = checked_sub(checked_mul(a[i][j], a[k][k]), checked_mul(a[i][k], a[k][j]));
                a[i][j] = num / prev;  // exact by Sylvester's identity
            }
            a[i][k] = 0;
        }
        prev = a[k][k];
    }
    return checked_mul(sign, a[n - 1][n - 1]);
}

}  // namespace

Int determinant(std::span<const LatticeVector> rows) { return bareiss(to_matrix(rows)); }

std::vector<Int> unimodular_solve(std::span<const LatticeVector> basis, const LatticeVector& target) {
    const std::size_t n = basis.size();
    if (target.dim() != n) throw InputError("unimodular_solve: target dimension mismatch");
    // Columns of the coefficient matrix are the basis vectors.
    Matrix cols(n, std::vector<Int>(n));
    for (std::size_t j = 0; j < n; ++j) {
        if (basis[j].dim() != n) throw InputError("unimodular_solve: basis dimension mismatch");
        for (std::size_t i = 0; i < n; ++i) cols[i][j] = basis[j][i];
    }
    const Int det = bareiss(cols);
    if (det != 1 && det != -1) throw PreconditionError("unimodular_solve: basis is not unimodular");
    // Cramer's rule; every quotient is exact since det = +-1.
    std::vector<Int> c(n);
    for (std::size_t j = 0; j < n; ++j) {
        Matrix m = cols;
        for (std::size_t i = 0; i < n; ++i) m[i][j] = target[i];
        c[j] = checked_mul(bareiss(std::move(m)), det);
    }
    return c;
}

std::vector<LatticeVector> dual_basis(std::span<const LatticeVector> basis) {
    const std::size_t n = basis.size();
    // u_i solves sum_k u_i[k] * t_k = e_i where t_k collects the k-th coordinates.
    std::vector<LatticeVector> transposed(n, LatticeVector(n));
    for (std::size_t j = 0; j < n; ++j) {
        if (basis[j].dim() != n) throw InputError("dual_basis: basis dimension mismatch");
        for (std::size_t k = 0; k < n; ++k) transposed[k][j] = basis[j][k];
    }
    std::vector<LatticeVector> dual;
    dual.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        LatticeVector e(n);
        e[i] = 1;
        dual.emplace_back(unimodular_solve(transposed, e));
    }
    return dual;
}

Int segment_lattice_count(const LatticeVector& p, const LatticeVector& q) {
    return checked_add((q - p).content(), 1);
}

}  // namespace toric
