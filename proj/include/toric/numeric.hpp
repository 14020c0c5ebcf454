#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace toric {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

using IVec = std::vector<Int>;
using IMat = std::vector<IVec>;  // row-major: a list of rows
using QVec = std::vector<Rat>;
using QMat = std::vector<QVec>;

// Sorted list of coordinate indices.
using IndexSet = std::vector<int>;

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline Int abs_int(const Int& a) { return a < 0 ? Int(-a) : a; }

inline Int gcd_int(Int a, Int b) {
    a = abs_int(a);
    b = abs_int(b);
    while (b != 0) {
        Int t = a % b;
        a = b;
        b = t;
    }
    return a;
}

inline Int lcm_int(const Int& a, const Int& b) {
    if (a == 0 || b == 0) return 0;
    return abs_int(a / gcd_int(a, b) * b);
}

// Floor and ceiling division for b > 0 or b < 0 (cpp_int truncates toward zero).
inline Int floor_div(const Int& a, const Int& b) {
    Int q = a / b;
    Int r = a % b;
    if (r != 0 && ((r < 0) != (b < 0))) q -= 1;
    return q;
}

inline Int ceil_div(const Int& a, const Int& b) { return -floor_div(-a, b); }

// Returns g = gcd(a,b) >= 0 together with x, y such that a*x + b*y = g.
inline Int ext_gcd(const Int& a, const Int& b, Int& x, Int& y) {
    Int old_r = a, r = b, old_s = 1, s = 0, old_t = 0, t = 1;
    while (r != 0) {
        Int q = old_r / r;
        Int tmp = old_r - q * r;
        old_r = r;
        r = tmp;
        tmp = old_s - q * s;
        old_s = s;
        s = tmp;
        tmp = old_t - q * t;
        old_t = t;
        t = tmp;
    }
    if (old_r < 0) {
        old_r = -old_r;
        old_s = -old_s;
        old_t = -old_t;
    }
    x = old_s;
    y = old_t;
    return old_r;
}

inline Int content(const IVec& v) {
    Int g = 0;
    for (const auto& x : v) g = gcd_int(g, x);
    return g;
}

inline bool is_zero(const IVec& v) {
    return std::all_of(v.begin(), v.end(), [](const Int& x) { return x == 0; });
}

inline IVec zero_vec(std::size_t n) { return IVec(n, Int(0)); }

inline IMat identity(std::size_t n) {
    IMat m(n, zero_vec(n));
    for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
    return m;
}

inline IVec add(const IVec& a, const IVec& b) {
    IVec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

inline IVec sub(const IVec& a, const IVec& b) {
    IVec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

inline IVec scale(const IVec& a, const Int& k) {
    IVec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] * k;
    return r;
}

inline IVec negate(const IVec& a) { return scale(a, Int(-1)); }

inline Int dot(const IVec& a, const IVec& b) {
    Int s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

// Row vector times matrix.
inline IVec vec_mul(const IVec& v, const IMat& m, std::size_t cols) {
    IVec r = zero_vec(cols);
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i] == 0) continue;
        for (std::size_t j = 0; j < cols; ++j) r[j] += v[i] * m[i][j];
    }
    return r;
}

inline IMat mat_mul(const IMat& a, const IMat& b, std::size_t bcols) {
    IMat r;
    r.reserve(a.size());
    for (const auto& row : a) r.push_back(vec_mul(row, b, bcols));
    return r;
}

inline IMat transpose(const IMat& a, std::size_t cols) {
    IMat t(cols, zero_vec(a.size()));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < cols; ++j) t[j][i] = a[i][j];
    return t;
}

template <class T>
std::vector<T> project(const std::vector<T>& v, const IndexSet& idx) {
    std::vector<T> r;
    r.reserve(idx.size());
    for (int i : idx) r.push_back(v[static_cast<std::size_t>(i)]);
    return r;
}

inline QVec to_rational(const IVec& v) { return QVec(v.begin(), v.end()); }

// Rank over the rationals by fraction-free Gaussian elimination.
template <class Row>
std::size_t rank_of(std::vector<Row> m) {
    if (m.empty()) return 0;
    const std::size_t cols = m[0].size();
    std::size_t rk = 0;
    for (std::size_t c = 0; c < cols && rk < m.size(); ++c) {
        std::size_t piv = rk;
        while (piv < m.size() && m[piv][c] == 0) ++piv;
        if (piv == m.size()) continue;
        std::swap(m[rk], m[piv]);
        for (std::size_t i = rk + 1; i < m.size(); ++i) {
            if (m[i][c] == 0) continue;
            auto f = m[i][c];
            auto p = m[rk][c];
            for (std::size_t j = c; j < cols; ++j) m[i][j] = m[i][j] * p - m[rk][j] * f;
        }
        ++rk;
    }
    return rk;
}

// Exact determinant by the Bareiss algorithm.
inline Int determinant(IMat m) {
    const std::size_t n = m.size();
    if (n == 0) return 1;
    Int sign = 1, prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k] == 0) {
            std::size_t s = k + 1;
            while (s < n && m[s][k] == 0) ++s;
            if (s == n) return 0;
            std::swap(m[k], m[s]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j)
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
        prev = m[k][k];
    }
    return sign * m[n - 1][n - 1];
}

inline Int parse_int(const std::string& s) {
    std::size_t i = 0;
    if (!s.empty() && (s[0] == '-' || s[0] == '+')) i = 1;
    if (i == s.size()) throw Error("not an integer: '" + s + "'");
    for (std::size_t k = i; k < s.size(); ++k)
        if (s[k] < '0' || s[k] > '9') throw Error("not an integer: '" + s + "'");
    return Int(s);
}

inline std::string to_string(const Int& a) { return a.str(); }

inline std::string to_string(const Rat& q) {
    const Int& num = boost::multiprecision::numerator(q);
    const Int& den = boost::multiprecision::denominator(q);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

inline Rat parse_rat(const std::string& s) {
    auto slash = s.find('/');
    if (slash == std::string::npos) return Rat(parse_int(s));
    Int den = parse_int(s.substr(slash + 1));
    if (den == 0) throw Error("zero denominator in '" + s + "'");
    return Rat(parse_int(s.substr(0, slash)), den);
}

inline Int floor_rat(const Rat& q) {
    return floor_div(boost::multiprecision::numerator(q), boost::multiprecision::denominator(q));
}

inline Int ceil_rat(const Rat& q) {
    return ceil_div(boost::multiprecision::numerator(q), boost::multiprecision::denominator(q));
}

inline bool contains(const IndexSet& s, int i) { return std::binary_search(s.begin(), s.end(), i); }

inline IndexSet set_intersection(const IndexSet& a, const IndexSet& b) {
    IndexSet r;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(r));
    return r;
}

inline IndexSet set_difference(const IndexSet& a, const IndexSet& b) {
    IndexSet r;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(r));
    return r;
}

inline IndexSet set_union(const IndexSet& a, const IndexSet& b) {
    IndexSet r;
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(r));
    return r;
}

inline IndexSet range_set(int n) {
    IndexSet r(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) r[static_cast<std::size_t>(i)] = i;
    return r;
}

}  // namespace toric
