#include "squint/linalg.hpp"

#include <algorithm>

namespace squint {

int bareiss_rank(IntMatrix m) {
    const int rows = static_cast<int>(m.size());
    const int cols = rows ? static_cast<int>(m[0].size()) : 0;
    Integer prev(1);
    int rank = 0;
    int row = 0;
    for (int col = 0; col < cols && row < rows; ++col) {
        // pick the nonzero pivot with the smallest absolute value, for growth control
        int pivot = -1;
        for (int i = row; i < rows; ++i) {
            if (m[i][col] == 0) continue;
            if (pivot < 0 || mpz_cmpabs(m[i][col].get_mpz_t(), m[pivot][col].get_mpz_t()) < 0)
                pivot = i;
        }
        if (pivot < 0) continue;
        std::swap(m[row], m[pivot]);
        for (int i = row + 1; i < rows; ++i) {
            for (int j = col + 1; j < cols; ++j) {
                Integer num = m[i][j] * m[row][col] - m[i][col] * m[row][j];
                mpz_divexact(m[i][j].get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
            }
            m[i][col] = 0;
        }
        prev = m[row][col];
        ++row;
        ++rank;
    }
    return rank;
}

IntMatrix clear_denominators(const RatMatrix& m) {
    IntMatrix out;
    out.reserve(m.size());
    for (const auto& r : m) {
        Integer lcm(1);
        for (const Rational& x : r) {
            Integer den = x.get_den();
            mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), den.get_mpz_t());
        }
        std::vector<Integer> row;
        row.reserve(r.size());
        for (const Rational& x : r) {
            Rational scaled = x * Rational(lcm);
            row.push_back(scaled.get_num()); // denominator is 1 after scaling
        }
        out.push_back(std::move(row));
    }
    return out;
}

int rational_rank(const RatMatrix& m) { return bareiss_rank(clear_denominators(m)); }

} // namespace squint
