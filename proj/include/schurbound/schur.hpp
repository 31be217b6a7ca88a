#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "partition.hpp"

namespace schurbound {

/// Exact integer polynomial in the graded variables c_1..c_r, stored in the
/// monomial basis: each term is keyed by the partition lambda with
/// c_lambda = prod_i c_{lambda_i}, the empty partition keying the constant 1.
/// Normalized form: no zero coefficients are stored, every key has largest
/// part <= rank. Assigning c_i weight i makes a polynomial homogeneous of
/// degree k exactly when every key has size k.
class CPolynomial {
public:
    using TermMap = std::map<Partition, Int, RevLexLess>;

    /// The zero polynomial at the given rank (empty term map).
    explicit CPolynomial(int rank) : rank_(rank) {
        if (rank < 1) throw std::invalid_argument("rank must be >= 1");
    }

    /// The single-term polynomial c_lambda.
    static CPolynomial monomial(const Partition& lambda, int rank) {
        CPolynomial p(rank);
        if (lambda.part(0) > rank)
            throw RankExceeded("monomial part " + std::to_string(lambda.part(0)) + " > rank " +
                               std::to_string(rank));
        p.terms_.emplace(lambda, 1);
        return p;
    }

    static CPolynomial constant(int rank, Int value) {
        CPolynomial p(rank);
        if (value != 0) p.terms_.emplace(Partition{}, value);
        return p;
    }

    int rank() const noexcept { return rank_; }
    const TermMap& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }

    Int coeff(const Partition& key) const {
        auto it = terms_.find(key);
        return it == terms_.end() ? 0 : it->second;
    }

    /// True for the zero polynomial and for any polynomial whose keys all
    /// share one size.
    bool is_homogeneous() const noexcept {
        if (terms_.empty()) return true;
        const int k = terms_.begin()->first.size();
        for (const auto& [key, c] : terms_)
            if (key.size() != k) return false;
        return true;
    }

    /// Merges a term, keeping normalized form.
    void add_term(const Partition& key, Int value) {
        if (value == 0) return;
        if (key.part(0) > rank_)
            throw RankExceeded("term part " + std::to_string(key.part(0)) + " > rank " +
                               std::to_string(rank_));
        auto it = terms_.find(key);
        if (it == terms_.end()) {
            terms_.emplace(key, value);
        } else {
            it->second = checked_add(it->second, value);
            if (it->second == 0) terms_.erase(it);
        }
    }

    CPolynomial& operator+=(const CPolynomial& other) {
        require_same_rank(other);
        for (const auto& [key, c] : other.terms_) add_term(key, c);
        return *this;
    }

    CPolynomial& operator-=(const CPolynomial& other) {
        require_same_rank(other);
        for (const auto& [key, c] : other.terms_) add_term(key, checked_sub(0, c));
        return *this;
    }

    friend CPolynomial operator+(CPolynomial lhs, const CPolynomial& rhs) {
        lhs += rhs;
        return lhs;
    }

    friend CPolynomial operator-(CPolynomial lhs, const CPolynomial& rhs) {
        lhs -= rhs;
        return lhs;
    }

    friend CPolynomial operator-(const CPolynomial& p) {
        CPolynomial out(p.rank_);
        for (const auto& [key, c] : p.terms_) out.terms_.emplace(key, checked_sub(0, c));
        return out;
    }

    /// Exact product: monomial keys merge by part-multiset union.
    friend CPolynomial operator*(const CPolynomial& lhs, const CPolynomial& rhs) {
        lhs.require_same_rank(rhs);
        CPolynomial out(lhs.rank_);
        std::vector<int> merged;
        for (const auto& [ka, ca] : lhs.terms_) {
            for (const auto& [kb, cb] : rhs.terms_) {
                merged.assign(ka.parts().begin(), ka.parts().end());
                merged.insert(merged.end(), kb.parts().begin(), kb.parts().end());
                std::sort(merged.begin(), merged.end(), std::greater<int>{});
                out.add_term(Partition(merged), checked_mul(ca, cb));
            }
        }
        return out;
    }

    friend CPolynomial operator*(CPolynomial p, Int scalar) {
        if (scalar == 0) return CPolynomial(p.rank_);
        for (auto& [key, c] : p.terms_) c = checked_mul(c, scalar);
        return p;
    }

    friend CPolynomial operator*(Int scalar, CPolynomial p) { return std::move(p) * scalar; }

    friend bool operator==(const CPolynomial&, const CPolynomial&) = default;

private:
    void require_same_rank(const CPolynomial& other) const {
        if (rank_ != other.rank_)
            throw RankMismatch("rank " + std::to_string(rank_) + " vs " +
                               std::to_string(other.rank_));
    }

    int rank_;
    TermMap terms_;
};

/// Integer vector over the Schur basis {S_lambda : lambda in Gamma(degree, rank)}.
/// Normalized: no zero coefficients. Membership in FL(degree, rank) means a
/// nonempty map with all coefficients >= 1.
class SchurExpansion {
public:
    using TermMap = std::map<Partition, Int, RevLexLess>;

    SchurExpansion(int rank, int degree) : rank_(rank), degree_(degree) {
        if (rank < 1) throw std::invalid_argument("rank must be >= 1");
        if (degree < 0) throw std::invalid_argument("degree must be >= 0");
    }

    int rank() const noexcept { return rank_; }
    int degree() const noexcept { return degree_; }
    const TermMap& coeffs() const noexcept { return coeffs_; }
    bool is_zero() const noexcept { return coeffs_.empty(); }

    Int coeff(const Partition& key) const {
        auto it = coeffs_.find(key);
        return it == coeffs_.end() ? 0 : it->second;
    }

    /// Merges a coefficient; keys must lie in Gamma(degree, rank).
    void add_term(const Partition& key, Int value) {
        if (value == 0) return;
        if (key.size() != degree_)
            throw NotHomogeneous("Schur key of size " + std::to_string(key.size()) +
                                 " in a degree " + std::to_string(degree_) + " expansion");
        if (key.part(0) > rank_)
            throw RankExceeded("Schur key part " + std::to_string(key.part(0)) + " > rank " +
                               std::to_string(rank_));
        auto it = coeffs_.find(key);
        if (it == coeffs_.end()) {
            coeffs_.emplace(key, value);
        } else {
            it->second = checked_add(it->second, value);
            if (it->second == 0) coeffs_.erase(it);
        }
    }

    void add_scaled(const SchurExpansion& other, Int scalar) {
        if (rank_ != other.rank_)
            throw RankMismatch("rank " + std::to_string(rank_) + " vs " +
                               std::to_string(other.rank_));
        if (degree_ != other.degree_)
            throw NotHomogeneous("degree " + std::to_string(degree_) + " vs " +
                                 std::to_string(other.degree_));
        for (const auto& [key, c] : other.coeffs_) add_term(key, checked_mul(c, scalar));
    }

    SchurExpansion& operator+=(const SchurExpansion& other) {
        add_scaled(other, 1);
        return *this;
    }

    SchurExpansion& operator-=(const SchurExpansion& other) {
        add_scaled(other, -1);
        return *this;
    }

    friend SchurExpansion operator+(SchurExpansion lhs, const SchurExpansion& rhs) {
        lhs += rhs;
        return lhs;
    }

    friend SchurExpansion operator-(SchurExpansion lhs, const SchurExpansion& rhs) {
        lhs -= rhs;
        return lhs;
    }

    friend bool operator==(const SchurExpansion&, const SchurExpansion&) = default;

private:
    int rank_;
    int degree_;
    TermMap coeffs_;
};

inline CPolynomial monomial(const Partition& lambda, int rank) {
    return CPolynomial::monomial(lambda, rank);
}

namespace detail {

// Parity of a permutation given as an index vector, by counting inversions.
inline bool permutation_is_odd(const std::vector<int>& perm) {
    int inv = 0;
    for (std::size_t a = 0; a < perm.size(); ++a)
        for (std::size_t b = a + 1; b < perm.size(); ++b)
            if (perm[a] > perm[b]) ++inv;
    return inv % 2 != 0;
}

}  // namespace detail

/// The Schur polynomial S_lambda(c_1, ..., c_r) as the determinant
/// det(c_{lambda_i - i + j}), expanded exactly over all l! permutations with
/// the conventions c_0 = 1 and c_i = 0 outside [0, r]. The whole first row
/// vanishes when lambda_1 > r, so the result is then the zero polynomial.
/// Cost is l! * l; fine for chain lengths at desk scale (l <= ~9).
inline CPolynomial jacobi_trudi(const Partition& lambda, int rank) {
    if (rank < 1) throw std::invalid_argument("rank must be >= 1");
    const int l = lambda.length();
    if (l == 0) return CPolynomial::constant(rank, 1);

    CPolynomial out(rank);
    std::vector<int> cols(static_cast<std::size_t>(l));
    std::iota(cols.begin(), cols.end(), 0);
    std::vector<int> key;
    do {
        bool dead = false;
        key.clear();
        for (int i = 0; i < l && !dead; ++i) {
            const int m = lambda.part(i) - i + cols[static_cast<std::size_t>(i)];
            if (m < 0 || m > rank)
                dead = true;  // c_m = 0
            else if (m > 0)
                key.push_back(m);  // c_0 = 1 contributes no variable
        }
        if (!dead) {
            std::sort(key.begin(), key.end(), std::greater<int>{});
            out.add_term(Partition(key), detail::permutation_is_odd(cols) ? -1 : 1);
        }
    } while (std::next_permutation(cols.begin(), cols.end()));
    return out;
}

/// Pieri rule: c_i * S_lambda = sum of S_mu over the mu of size |lambda| + i
/// satisfying the interlacing mu_1 >= lambda_1 >= mu_2 >= lambda_2 >= ...
/// (adding a horizontal strip of i boxes). Candidates with mu_1 > rank are
/// dropped: their Schur polynomials vanish identically at this rank, and no
/// later Pieri step can bring a part back under the bound.
inline SchurExpansion pieri(int i, const Partition& lambda, int rank) {
    if (i < 1) throw std::invalid_argument("pieri needs i >= 1");
    if (i > rank)
        throw RankExceeded("c_" + std::to_string(i) + " does not exist at rank " +
                           std::to_string(rank));
    if (lambda.part(0) > rank)
        throw RankExceeded("partition part " + std::to_string(lambda.part(0)) + " > rank " +
                           std::to_string(rank));

    const int l = lambda.length();
    SchurExpansion out(rank, lambda.size() + i);
    std::vector<int> mu(static_cast<std::size_t>(l) + 1);

    // choose mu_pos for pos = 0..l, spending exactly `i` extra boxes
    auto rec = [&](auto&& self, int pos, int extra) -> void {
        if (pos == l + 1) {
            if (extra == 0) out.add_term(Partition(mu), 1);
            return;
        }
        const int lo = pos < l ? lambda.part(pos) : 0;
        int hi = pos == 0 ? rank : lambda.part(pos - 1);
        hi = std::min(hi, lo + extra);
        for (int v = hi; v >= lo; --v) {
            mu[static_cast<std::size_t>(pos)] = v;
            self(self, pos + 1, extra - (v - lo));
            mu[static_cast<std::size_t>(pos)] = 0;
        }
    };
    rec(rec, 0, i);
    return out;
}

namespace detail {

inline SchurExpansion pieri_applied(int i, const SchurExpansion& e) {
    SchurExpansion out(e.rank(), e.degree() + i);
    for (const auto& [key, c] : e.coeffs()) {
        SchurExpansion step = pieri(i, key, e.rank());
        out.add_scaled(step, c);
    }
    return out;
}

}  // namespace detail

/// Expands a homogeneous polynomial over the Schur basis. Each monomial
/// c_nu = c_{nu_1} ... c_{nu_l} is expanded by applying the Pieri rule
/// successively for nu_l, nu_{l-1}, ..., nu_1 starting from the empty
/// partition; results are merged with the monomial's coefficient. The zero
/// polynomial yields the empty expansion (degree 0).
inline SchurExpansion expand_to_schur(const CPolynomial& p) {
    if (p.is_zero()) return SchurExpansion(p.rank(), 0);
    const int k = p.terms().begin()->first.size();
    for (const auto& [key, c] : p.terms()) {
        if (key.size() != k)
            throw NotHomogeneous("mixed degrees " + std::to_string(k) + " and " +
                                 std::to_string(key.size()));
    }

    SchurExpansion total(p.rank(), k);
    for (const auto& [key, c] : p.terms()) {
        SchurExpansion e(p.rank(), 0);
        e.add_term(Partition{}, 1);
        for (int idx = key.length() - 1; idx >= 0; --idx)
            e = detail::pieri_applied(key.part(idx), e);
        total.add_scaled(e, c);
    }
    return total;
}

/// W(P): the plain sum of Schur-basis coefficients. For FL members this is the
/// weight functional bounding Chern numbers from below.
inline Int weight(const SchurExpansion& e) {
    Int sum = 0;
    for (const auto& [key, c] : e.coeffs()) sum = checked_add(sum, c);
    return sum;
}

/// Membership in FL(k, r): some coefficient present and all of them positive.
inline bool is_fl_member(const SchurExpansion& e) {
    if (e.is_zero()) return false;
    for (const auto& [key, c] : e.coeffs())
        if (c < 1) return false;
    return true;
}

}  // namespace schurbound
