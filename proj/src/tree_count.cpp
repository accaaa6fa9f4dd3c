#include "burnoff/tree_count.hpp"

#include "burnoff/errors.hpp"

#include <cassert>
#include <utility>

namespace burnoff {

BigInt determinant(std::vector<std::vector<BigInt>> m) {
    const int n = static_cast<int>(m.size());
    for (const auto& row : m)
        if (static_cast<int>(row.size()) != n)
            throw precondition_error("determinant needs a square matrix");
    if (n == 0) return 1;

    /* Bareiss: after step k every entry is an exact integer, and each
     * division by the previous pivot leaves no remainder. */
    BigInt previous_pivot = 1;
    int sign = 1;
    BigInt value;
    for (int k = 0; k + 1 < n; ++k) {
        if (m[k][k] == 0) {
            int swap_row = -1;
            for (int i = k + 1; i < n; ++i)
                if (m[i][k] != 0) {
                    swap_row = i;
                    break;
                }
            if (swap_row < 0) return 0; // whole column zero: singular
            std::swap(m[k], m[swap_row]);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j) {
                value = m[i][j] * m[k][k] - m[i][k] * m[k][j];
                mpz_divexact(m[i][j].get_mpz_t(), value.get_mpz_t(),
                             previous_pivot.get_mpz_t());
            }
            m[i][k] = 0;
        }
        previous_pivot = m[k][k];
    }
    return sign < 0 ? BigInt(-m[n - 1][n - 1]) : m[n - 1][n - 1];
}

BigInt tree_count(const Graph& g) {
    const int n = g.vertex_count();
    if (n <= 1) return 1;

    /* reduced Laplacian: drop the last row and column */
    std::vector<std::vector<BigInt>> lap(n - 1, std::vector<BigInt>(n - 1, 0));
    for (int i = 0; i + 1 < n; ++i) {
        lap[i][i] = g.degree(i);
        for (int j : g.neighbors(i))
            if (j < n - 1) lap[i][j] = -1;
    }
    BigInt result = determinant(std::move(lap));
    assert(result >= 0);
    return result;
}

BigInt tree_count_minus_apex_edge(const ConeGraph& c, int v) {
    if (v < 0 || v >= c.base().vertex_count())
        throw input_error("apex-edge endpoint " + std::to_string(v) +
                          " is not a base vertex");
    return tree_count(c.full().without_edge(v, c.apex()));
}

} // namespace burnoff
