#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace turan {

enum class Branch { clique, join, tie };

inline const char* branch_name(Branch b) {
    switch (b) {
        case Branch::clique: return "clique-branch";
        case Branch::join: return "join-branch";
        case Branch::tie: return "tie";
    }
    return "?";
}

struct TuranValue {
    std::uint64_t value = 0;
    Branch attained_by = Branch::tie;
};

// Exact C(a, b); zero when a < b. Overflow of the running product is an
// error, not a wraparound.
inline std::uint64_t binomial(std::uint64_t a, std::uint64_t b) {
    if (b > a) return 0;
    if (b > a - b) b = a - b;
    unsigned __int128 acc = 1;
    for (std::uint64_t i = 1; i <= b; ++i) {
        acc = acc * (a - b + i) / i;
        if (acc > ~std::uint64_t{0}) throw std::overflow_error("binomial: result exceeds 64 bits");
    }
    return static_cast<std::uint64_t>(acc);
}

namespace detail {
inline TuranValue pick(std::uint64_t clique_arm, std::uint64_t join_arm) {
    if (clique_arm > join_arm) return {clique_arm, Branch::clique};
    if (join_arm > clique_arm) return {join_arm, Branch::join};
    return {clique_arm, Branch::tie};
}
}  // namespace detail

// ex(n; L_{n,k}) = max{ C(k,2), C(n,2) - C(n - floor((k-1)/2), 2) + c },
// c = 0 for odd k, c = 1 for even k. Valid for 1 <= k <= n-1.
inline TuranValue ex_linear_forest(std::uint64_t n, std::uint64_t k) {
    if (k < 1 || k + 1 > n)
        throw std::invalid_argument("ex_linear_forest: need 1 <= k <= n-1");
    std::uint64_t half = (k - 1) / 2;
    std::uint64_t c = (k % 2 == 1) ? 0 : 1;
    return detail::pick(binomial(k, 2), binomial(n, 2) - binomial(n - half, 2) + c);
}

// Erdos-Gallai: ex(n; M_{k+1}) = max{ C(2k+1,2), C(n,2) - C(n-k,2) }.
inline TuranValue ex_matching(std::uint64_t n, std::uint64_t k) {
    if (n < 1) throw std::invalid_argument("ex_matching: need n >= 1");
    std::uint64_t join_arm = binomial(n, 2) - (n >= k ? binomial(n - k, 2) : 0);
    return detail::pick(binomial(2 * k + 1, 2), join_arm);
}

// ex(n; P_n) = C(n-1, 2).
inline std::uint64_t ex_ham_path(std::uint64_t n) {
    if (n < 2) throw std::invalid_argument("ex_ham_path: need n >= 2");
    return binomial(n - 1, 2);
}

// r-uniform conjecture value: max{ C(k+r-2, r), C(n,r) - C(n-(k-1)/r, r) }
// for k = m*r + 1, m >= 1.
inline TuranValue ex_conjecture_r(std::uint64_t n, std::uint64_t k, std::uint64_t r) {
    if (r < 1) throw std::invalid_argument("ex_conjecture_r: need r >= 1");
    if (k < r + 1 || (k - 1) % r != 0)
        throw std::invalid_argument("ex_conjecture_r: need k = m*r + 1 with m >= 1");
    if (n + 2 < k + r)
        throw std::invalid_argument("ex_conjecture_r: need n >= k + r - 2");
    std::uint64_t m = (k - 1) / r;
    return detail::pick(binomial(k + r - 2, r), binomial(n, r) - binomial(n - m, r));
}

}  // namespace turan
