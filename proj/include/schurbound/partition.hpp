#pragma once

#include <algorithm>
#include <charconv>
#include <initializer_list>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "errors.hpp"

namespace schurbound {

/// An integer partition: weakly decreasing positive parts, stored in canonical
/// form (zeros stripped at construction). The empty partition is valid and is
/// the unique partition of 0. Immutable after construction.
class Partition {
public:
    Partition() = default;

    /// Canonicalizes a raw part sequence: drops zeros, then requires the
    /// remaining parts to be weakly decreasing.
    explicit Partition(std::vector<int> raw_parts) {
        for (int p : raw_parts) {
            if (p < 0)
                throw std::invalid_argument("partition parts must be nonnegative");
            if (p > 0)
                parts_.push_back(p);
        }
        for (std::size_t i = 1; i < parts_.size(); ++i) {
            if (parts_[i - 1] < parts_[i])
                throw NotWeaklyDecreasing("parts increase: " + std::to_string(parts_[i - 1]) +
                                          " < " + std::to_string(parts_[i]));
        }
        for (int p : parts_) size_ += p;
    }

    Partition(std::initializer_list<int> raw_parts)
        : Partition(std::vector<int>(raw_parts)) {}

    const std::vector<int>& parts() const noexcept { return parts_; }

    /// n = sum of parts.
    int size() const noexcept { return size_; }

    /// l(lambda) = number of parts.
    int length() const noexcept { return static_cast<int>(parts_.size()); }

    bool empty() const noexcept { return parts_.empty(); }

    /// Zero-padded part access, 0-based: part(i) = 0 for i >= length().
    int part(int i) const noexcept {
        return (i >= 0 && i < length()) ? parts_[static_cast<std::size_t>(i)] : 0;
    }

    friend bool operator==(const Partition&, const Partition&) = default;

private:
    std::vector<int> parts_;
    int size_ = 0;
};

/// Canonical listing order: zero-padded part sequences compared entrywise,
/// the larger first difference listed first. On Par(n) this puts (n) first and
/// (1^n) last and is a linear extension of the dominance order, so sorting by
/// it also topologically sorts any cover DAG. Used everywhere determinism is
/// promised (enumeration, term maps, serialization).
struct RevLexLess {
    bool operator()(const Partition& a, const Partition& b) const noexcept {
        const int len = std::max(a.length(), b.length());
        for (int i = 0; i < len; ++i) {
            if (a.part(i) != b.part(i)) return a.part(i) > b.part(i);
        }
        return false;
    }
};

/// lambda dominates mu: every prefix sum of lambda is >= the matching prefix
/// sum of mu. Defined only inside Par(n); differing sizes are a caller bug.
inline bool dominates(const Partition& lhs, const Partition& rhs) {
    if (lhs.size() != rhs.size())
        throw SizeMismatch("dominance needs equal sizes, got " + std::to_string(lhs.size()) +
                           " and " + std::to_string(rhs.size()));
    const int len = std::max(lhs.length(), rhs.length());
    long long sl = 0, sr = 0;
    for (int i = 0; i < len; ++i) {
        sl += lhs.part(i);
        sr += rhs.part(i);
        if (sl < sr) return false;
    }
    return true;
}

/// If lambda covers mu, returns the 0-based index pair (i, j), i < j, of the
/// moved unit: lambda_i = mu_i + 1, lambda_j = mu_j - 1, all other parts equal,
/// and either j = i + 1 or mu_i = mu_j. Otherwise nullopt.
///
/// The two conditions characterize covers in the dominance order: mu is
/// obtained from lambda by moving one unit from a part to the next nearest
/// available part.
inline std::optional<std::pair<int, int>> cover_move(const Partition& lambda,
                                                     const Partition& mu) {
    if (lambda.size() != mu.size())
        throw SizeMismatch("covers needs equal sizes, got " + std::to_string(lambda.size()) +
                           " and " + std::to_string(mu.size()));
    const int len = std::max(lambda.length(), mu.length());
    int i = -1, j = -1;
    for (int k = 0; k < len; ++k) {
        const int d = lambda.part(k) - mu.part(k);
        if (d == 0) continue;
        if (d == 1 && i < 0 && j < 0) {
            i = k;
        } else if (d == -1 && i >= 0 && j < 0) {
            j = k;
        } else {
            return std::nullopt;
        }
    }
    if (i < 0 || j < 0) return std::nullopt;
    if (j != i + 1 && mu.part(i) != mu.part(j)) return std::nullopt;
    return std::make_pair(i, j);
}

/// lambda covers mu: lambda > mu with nothing strictly between.
inline bool covers(const Partition& lambda, const Partition& mu) {
    return cover_move(lambda, mu).has_value();
}

/// All mu covered by lambda, generated constructively from the cover
/// characterization (move one unit from part i to a later position j), in
/// canonical listing order. Everything returned stays inside Gamma(n, rank)
/// automatically since mu_1 <= lambda_1.
inline std::vector<Partition> down_covers(const Partition& lambda, int rank) {
    if (lambda.part(0) > rank)
        throw RankExceeded("partition has part " + std::to_string(lambda.part(0)) +
                           " > rank " + std::to_string(rank));
    const int l = lambda.length();
    std::vector<Partition> out;
    std::vector<int> cand;
    for (int i = 0; i < l; ++i) {
        for (int j = i + 1; j <= l; ++j) {
            cand.assign(lambda.parts().begin(), lambda.parts().end());
            if (j == l) cand.push_back(0);
            --cand[static_cast<std::size_t>(i)];
            ++cand[static_cast<std::size_t>(j)];
            bool ok = cand.back() >= 1;
            for (std::size_t k = 1; ok && k < cand.size(); ++k)
                ok = cand[k - 1] >= cand[k];
            // (cover2): adjacent positions, or equal parts in mu
            if (ok && (j == i + 1 || cand[static_cast<std::size_t>(i)] ==
                                         cand[static_cast<std::size_t>(j)]))
                out.emplace_back(cand);
        }
    }
    std::sort(out.begin(), out.end(), RevLexLess{});
    return out;
}

namespace detail {

inline void gamma_rec(int remaining, int max_part, std::vector<int>& prefix,
                      std::vector<Partition>& out) {
    if (remaining == 0) {
        out.emplace_back(prefix);
        return;
    }
    for (int first = std::min(remaining, max_part); first >= 1; --first) {
        prefix.push_back(first);
        gamma_rec(remaining - first, first, prefix, out);
        prefix.pop_back();
    }
}

}  // namespace detail

/// All of Gamma(n, rank) = partitions of n with largest part <= rank, in
/// canonical listing order. Gamma(n, rank) = Par(n) whenever n <= rank.
inline std::vector<Partition> gamma_elements(int n, int rank) {
    if (n < 1 || rank < 1)
        throw std::invalid_argument("gamma_elements needs n >= 1 and rank >= 1");
    std::vector<Partition> out;
    std::vector<int> prefix;
    detail::gamma_rec(n, rank, prefix, out);
    return out;
}

/// 1-hat of Gamma(n, rank): (r, ..., r, n - r*floor(n/r)) with floor(n/r)
/// copies of r and the remainder appended when nonzero.
inline Partition max_element(int n, int rank) {
    if (n < 1 || rank < 1)
        throw std::invalid_argument("max_element needs n >= 1 and rank >= 1");
    std::vector<int> parts(static_cast<std::size_t>(n / rank), rank);
    if (n % rank != 0) parts.push_back(n % rank);
    return Partition(std::move(parts));
}

/// 0-hat of Par(n): (1, ..., 1).
inline Partition min_element(int n) {
    if (n < 1) throw std::invalid_argument("min_element needs n >= 1");
    return Partition(std::vector<int>(static_cast<std::size_t>(n), 1));
}

/// A partition validated against a rank bound: membership in Gamma(n, r).
class RankedShape {
public:
    RankedShape(Partition partition, int rank)
        : partition_(std::move(partition)), rank_(rank) {
        if (rank_ < 1) throw std::invalid_argument("rank must be >= 1");
        if (partition_.part(0) > rank_)
            throw RankExceeded("part " + std::to_string(partition_.part(0)) + " > rank " +
                               std::to_string(rank_));
    }

    static bool fits(const Partition& partition, int rank) noexcept {
        return rank >= 1 && partition.part(0) <= rank;
    }

    const Partition& partition() const noexcept { return partition_; }
    int rank() const noexcept { return rank_; }

private:
    Partition partition_;
    int rank_;
};

/// Canonical text form: comma-separated parts, "4,1,1,1". Empty partition
/// renders as the empty string.
inline std::string to_string(const Partition& p) {
    std::string s;
    for (int i = 0; i < p.length(); ++i) {
        if (i) s += ',';
        s += std::to_string(p.part(i));
    }
    return s;
}

/// Parses the canonical comma form "4,1,1,1". A comma-free multi-digit token
/// is read in compact form, one part per digit ("4111"); a part of 10 or more
/// therefore needs the comma form (a trailing comma is allowed: "12," is the
/// single part 12).
inline Partition parse_partition(std::string_view text) {
    auto parse_int = [](std::string_view tok) {
        int value = 0;
        const char* b = tok.data();
        const char* e = b + tok.size();
        auto [ptr, ec] = std::from_chars(b, e, value);
        if (ec != std::errc{} || ptr != e)
            throw std::invalid_argument("bad partition part '" + std::string(tok) + "'");
        return value;
    };
    std::vector<int> parts;
    if (text.find(',') != std::string_view::npos) {
        while (!text.empty()) {
            const std::size_t pos = text.find(',');
            std::string_view tok = text.substr(0, pos);
            text.remove_prefix(pos == std::string_view::npos ? text.size() : pos + 1);
            if (tok.empty() && text.empty()) break;  // trailing comma
            parts.push_back(parse_int(tok));
        }
    } else if (text.empty()) {
        throw std::invalid_argument("empty partition text");
    } else if (text.size() == 1) {
        parts.push_back(parse_int(text));
    } else {
        for (char c : text) {
            if (c < '0' || c > '9')
                throw std::invalid_argument("bad partition text '" + std::string(text) + "'");
            parts.push_back(c - '0');
        }
    }
    return Partition(std::move(parts));
}

}  // namespace schurbound
