#pragma once

#include <cstdint>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "tutte/bigint.hpp"

namespace tutte {

// Integer partition: non-increasing sequence of positive parts.
class Partition {
public:
    Partition() = default;

    explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (parts_[i] < 1)
                throw std::invalid_argument("Partition: parts must be positive");
            if (i > 0 && parts_[i] > parts_[i - 1])
                throw std::invalid_argument("Partition: parts must be non-increasing");
        }
    }

    const std::vector<int>& parts() const { return parts_; }
    int sum() const {
        int s = 0;
        for (int p : parts_) s += p;
        return s;
    }
    int length() const { return static_cast<int>(parts_.size()); }

    bool operator==(const Partition& other) const { return parts_ == other.parts_; }
    bool operator!=(const Partition& other) const { return !(*this == other); }
    // Lexicographic on part sequences; canonical report order is the reverse.
    bool operator<(const Partition& other) const { return parts_ < other.parts_; }

private:
    std::vector<int> parts_;
};

namespace detail {
inline void emit_partitions(int remaining, int max_part, std::vector<int>& prefix,
                            std::vector<Partition>& out) {
    if (remaining == 0) {
        out.emplace_back(prefix);
        return;
    }
    for (int k = std::min(remaining, max_part); k >= 1; --k) {
        prefix.push_back(k);
        emit_partitions(remaining - k, k, prefix, out);
        prefix.pop_back();
    }
}

inline void emit_partitions_len(int remaining, int len, int max_part, std::vector<int>& prefix,
                                std::vector<Partition>& out) {
    if (len == 0) {
        if (remaining == 0) out.emplace_back(prefix);
        return;
    }
    // each of the len remaining parts is >= 1 and <= max_part
    if (remaining < len || remaining > len * max_part) return;
    for (int k = std::min(remaining - (len - 1), max_part); k >= 1; --k) {
        prefix.push_back(k);
        emit_partitions_len(remaining - k, len - 1, k, prefix, out);
        prefix.pop_back();
    }
}
}  // namespace detail

// All partitions of n in canonical (reverse-lexicographic) order:
// (n) first, 1^n last.
inline std::vector<Partition> all_partitions(int n) {
    if (n < 1) throw std::invalid_argument("all_partitions: n must be >= 1");
    std::vector<Partition> out;
    std::vector<int> prefix;
    detail::emit_partitions(n, n, prefix, out);
    return out;
}

// Partitions of n with exactly r parts, same canonical order. Out-of-range r
// yields an empty sequence.
inline std::vector<Partition> partitions_with_length(int n, int r) {
    if (n < 1) throw std::invalid_argument("partitions_with_length: n must be >= 1");
    std::vector<Partition> out;
    if (r < 1 || r > n) return out;
    std::vector<int> prefix;
    detail::emit_partitions_len(n, r, n, prefix, out);
    return out;
}

// n(lambda) = sum_i (i-1) * lambda_i, 1-based i.
inline long long n_stat(const Partition& p) {
    long long s = 0;
    const auto& parts = p.parts();
    for (std::size_t i = 0; i < parts.size(); ++i) s += static_cast<long long>(i) * parts[i];
    return s;
}

// m(lambda)! = r_1! r_2! ... over part multiplicities.
inline Int multiplicity_factorial(const Partition& p) {
    Int result = 1;
    const auto& parts = p.parts();
    std::size_t i = 0;
    while (i < parts.size()) {
        std::size_t j = i;
        while (j < parts.size() && parts[j] == parts[i]) ++j;
        result *= factorial(static_cast<long long>(j - i));
        i = j;
    }
    return result;
}

// Reduced notation 1^{r_1} 2^{r_2} ...: "(2,1,1)" renders as "1^2 2".
inline std::string format_reduced(const Partition& p) {
    std::map<int, int> mult;
    for (int part : p.parts()) ++mult[part];
    std::ostringstream os;
    bool first = true;
    for (const auto& [value, count] : mult) {
        if (!first) os << ' ';
        first = false;
        os << value;
        if (count > 1) os << '^' << count;
    }
    return os.str();
}

// Parses either the part-list form "(3,1)" or the reduced form "1^2 2".
// Malformed input raises an error naming the offending token.
inline Partition parse_reduced(const std::string& s) {
    auto fail = [](const std::string& token) -> Partition {
        throw std::invalid_argument("parse_reduced: bad token '" + token + "'");
    };
    std::vector<int> parts;
    // part-list form
    if (!s.empty() && s.front() == '(') {
        if (s.back() != ')') return fail(s);
        const std::string inner = s.substr(1, s.size() - 2);
        std::size_t start = 0;
        for (;;) {
            const auto comma = inner.find(',', start);
            const std::string token =
                comma == std::string::npos ? inner.substr(start) : inner.substr(start, comma - start);
            try {
                std::size_t pos = 0;
                int v = std::stoi(token, &pos);
                if (pos != token.size() || v < 1) return fail(token);
                parts.push_back(v);
            } catch (const std::logic_error&) {
                return fail(token);
            }
            if (comma == std::string::npos) break;
            start = comma + 1;
        }
        return Partition(parts);
    }
    // reduced form: whitespace-separated "v" or "v^mult" entries
    std::istringstream is(s);
    std::string token;
    std::map<int, int> mult;
    while (is >> token) {
        int value = 0, count = 1;
        auto caret = token.find('^');
        try {
            std::string head = token.substr(0, caret);
            std::size_t pos = 0;
            value = std::stoi(head, &pos);
            if (pos != head.size() || value < 1) return fail(token);
            if (caret != std::string::npos) {
                std::string tail = token.substr(caret + 1);
                count = std::stoi(tail, &pos);
                if (pos != tail.size() || count < 1) return fail(token);
            }
        } catch (const std::logic_error&) {
            return fail(token);
        }
        mult[value] += count;
    }
    if (mult.empty()) return fail(s);
    for (auto it = mult.rbegin(); it != mult.rend(); ++it)
        for (int k = 0; k < it->second; ++k) parts.push_back(it->first);
    return Partition(parts);
}

// Display form "(3,1)"; used by reports and test diagnostics.
inline std::string format_parts(const Partition& p) {
    std::ostringstream os;
    os << '(';
    const auto& parts = p.parts();
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i) os << ',';
        os << parts[i];
    }
    os << ')';
    return os.str();
}

inline std::ostream& operator<<(std::ostream& os, const Partition& p) {
    return os << format_parts(p);
}

}  // namespace tutte
