#include "spin7/clifford.hpp"

#include <cmath>
#include <cstdlib>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "spin7/rational.hpp"

namespace spin7 {

namespace {

// multiplication table of the octonions in the basis u_0..u_6 (imaginary),
// u_7 = 1. Each line is an associative triple u_a u_b = s u_c, extended
// cyclically; all other products follow from antisymmetry and u_i^2 = -1.
struct Triple { int a, b, c, s; };
constexpr Triple FANO[7] = {
    {0, 1, 4, -1}, {0, 2, 5, -1}, {0, 3, 6, -1}, {1, 2, 6, -1},
    {1, 3, 5, +1}, {2, 3, 4, -1}, {4, 5, 6, +1},
};

struct OctTable {
    int idx[8][8];   // index of u_i u_j
    int sgn[8][8];   // sign of u_i u_j
    OctTable() {
        for (int j = 0; j < 8; ++j) {
            idx[7][j] = j; sgn[7][j] = 1;
            idx[j][7] = j; sgn[j][7] = 1;
        }
        for (int i = 0; i < 7; ++i) { idx[i][i] = 7; sgn[i][i] = -1; }
        for (const auto& t : FANO) {
            const int p[3] = {t.a, t.b, t.c};
            for (int r = 0; r < 3; ++r) {
                int a = p[r], b = p[(r + 1) % 3], c = p[(r + 2) % 3];
                idx[a][b] = c; sgn[a][b] = t.s;
                idx[b][a] = c; sgn[b][a] = -t.s;
            }
        }
    }
};

const OctTable& oct() {
    static const OctTable T;
    return T;
}

IMat16 zero16() {
    IMat16 m{};
    return m;
}

std::array<IMat16, 8> build_gammas() {
    std::array<IMat16, 8> g;
    const auto& T = oct();
    for (int A = 0; A < 8; ++A) {
        IMat16 m = zero16();
        // L_A[i][j] = coefficient of u_i in u_A u_j
        for (int j = 0; j < 8; ++j) {
            int i = T.idx[A][j], s = T.sgn[A][j];
            m[i][8 + j] = s;       // upper right block: L_A
            m[8 + j][i] = s;       // lower left block: L_A^T
        }
        g[A] = m;
    }
    return g;
}

IMat16 imul(const IMat16& x, const IMat16& y) {
    IMat16 r = zero16();
    for (int i = 0; i < 16; ++i)
        for (int k = 0; k < 16; ++k) {
            int xik = x[i][k];
            if (xik == 0) continue;
            for (int j = 0; j < 16; ++j) r[i][j] += xik * y[k][j];
        }
    return r;
}

void iaxpy(IMat16& acc, int c, const IMat16& m) {
    for (int i = 0; i < 16; ++i)
        for (int j = 0; j < 16; ++j) acc[i][j] += c * m[i][j];
}

struct OpTerm { int coef, A, B; };

// the fifteen annihilating structures, as combinations coef * G_A G_B
const std::vector<std::vector<OpTerm>>& op_table() {
    static const std::vector<std::vector<OpTerm>> T = {
        {{2, 0, 7}, {-1, 1, 4}, {-1, 2, 5}},
        {{1, 0, 7}, {-1, 3, 6}},
        {{2, 1, 7}, {1, 0, 4}, {1, 3, 5}},
        {{1, 1, 7}, {-1, 2, 6}},
        {{2, 2, 7}, {1, 0, 5}, {-1, 3, 4}},
        {{1, 2, 7}, {1, 1, 6}},
        {{2, 3, 7}, {1, 2, 4}, {-1, 1, 5}},
        {{1, 3, 7}, {1, 0, 6}},
        {{2, 4, 7}, {-1, 0, 1}, {-1, 2, 3}},
        {{1, 4, 7}, {1, 5, 6}},
        {{2, 5, 7}, {-1, 0, 2}, {1, 1, 3}},
        {{1, 5, 7}, {-1, 4, 6}},
        {{2, 6, 7}, {-1, 0, 3}, {-1, 1, 2}},
        {{1, 6, 7}, {1, 4, 5}},
        {{2, 4, 5}, {1, 0, 3}, {1, 1, 2}},
    };
    return T;
}

}  // namespace

const std::array<IMat16, 8>& gamma_matrices() {
    static const std::array<IMat16, 8> G = build_gammas();
    return G;
}

IMat16 gamma_product(int A, int B) {
    const auto& G = gamma_matrices();
    return imul(G[A], G[B]);
}

IMat16 gamma_product4(int A, int B, int C, int D) {
    const auto& G = gamma_matrices();
    return imul(imul(G[A], G[B]), imul(G[C], G[D]));
}

IMat16 gamma_chirality() {
    const auto& G = gamma_matrices();
    IMat16 m = G[0];
    for (int A = 1; A < 8; ++A) m = imul(m, G[A]);
    return m;
}

int anticommutator_defect() {
    const auto& G = gamma_matrices();
    int worst = 0;
    for (int A = 0; A < 8; ++A)
        for (int B = A; B < 8; ++B) {
            IMat16 s = imul(G[A], G[B]);
            iaxpy(s, 1, imul(G[B], G[A]));
            for (int i = 0; i < 16; ++i)
                for (int j = 0; j < 16; ++j) {
                    int want = (A == B && i == j) ? 2 : 0;
                    worst = std::max(worst, std::abs(s[i][j] - want));
                }
        }
    return worst;
}

const std::array<IMat16, 15>& holonomy_operators() {
    static const std::array<IMat16, 15> OPS = [] {
        std::array<IMat16, 15> ops;
        const auto& table = op_table();
        for (std::size_t n = 0; n < table.size(); ++n) {
            IMat16 m = zero16();
            for (const auto& term : table[n]) iaxpy(m, term.coef, gamma_product(term.A, term.B));
            ops[n] = m;
        }
        return ops;
    }();
    return OPS;
}

IVec16 parallel_spinor() {
    // stack the fifteen operators and take the exact nullspace
    const auto& ops = holonomy_operators();
    std::vector<std::array<Rational, 16>> rows;
    for (const auto& op : ops)
        for (int i = 0; i < 16; ++i) {
            std::array<Rational, 16> row;
            bool nonzero = false;
            for (int j = 0; j < 16; ++j) {
                row[j] = Rational(op[i][j]);
                nonzero = nonzero || op[i][j] != 0;
            }
            if (nonzero) rows.push_back(row);
        }

    int pivot_col[16];
    int rank = 0;
    std::size_t r = 0;
    for (int col = 0; col < 16 && r < rows.size(); ++col) {
        std::size_t p = r;
        while (p < rows.size() && rows[p][col] == 0) ++p;
        if (p == rows.size()) continue;
        std::swap(rows[r], rows[p]);
        Rational inv = rows[r][col];
        for (int j = col; j < 16; ++j) rows[r][j] /= inv;
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i == r || rows[i][col] == 0) continue;
            Rational m = rows[i][col];
            for (int j = col; j < 16; ++j) rows[i][j] -= m * rows[r][j];
        }
        pivot_col[rank++] = col;
        ++r;
    }
    if (rank != 15) throw std::logic_error("parallel spinor space is not one-dimensional");

    bool is_pivot[16] = {};
    for (int i = 0; i < rank; ++i) is_pivot[pivot_col[i]] = true;
    int free_col = -1;
    for (int j = 0; j < 16; ++j)
        if (!is_pivot[j]) { free_col = j; break; }

    std::array<Rational, 16> ker{};
    ker[free_col] = 1;
    for (int i = 0; i < rank; ++i) ker[pivot_col[i]] = -rows[i][free_col];

    // clear denominators, divide by content, make the leading entry positive
    boost::multiprecision::cpp_int lcm_den = 1;
    for (const auto& x : ker)
        lcm_den = boost::multiprecision::lcm(lcm_den, boost::multiprecision::denominator(x));
    std::array<boost::multiprecision::cpp_int, 16> num;
    boost::multiprecision::cpp_int g = 0;
    for (int j = 0; j < 16; ++j) {
        num[j] = boost::multiprecision::numerator(Rational(ker[j] * lcm_den));
        g = boost::multiprecision::gcd(g, num[j]);
    }
    if (g == 0) throw std::logic_error("parallel spinor vanished");
    int lead_sign = 0;
    for (int j = 0; j < 16 && lead_sign == 0; ++j)
        if (num[j] != 0) lead_sign = num[j] > 0 ? 1 : -1;
    IVec16 out{};
    for (int j = 0; j < 16; ++j) out[j] = static_cast<int>(num[j] / g) * lead_sign;
    return out;
}

namespace {

Vec16 unit_spinor() {
    IVec16 s = parallel_spinor();
    double n2 = 0;
    for (int x : s) n2 += double(x) * x;
    double inv = 1.0 / std::sqrt(n2);
    Vec16 eta;
    for (int j = 0; j < 16; ++j) eta[j] = s[j] * inv;
    return eta;
}

double apply_norm(const IMat16& m, const Vec16& x) {
    double n2 = 0;
    for (int i = 0; i < 16; ++i) {
        double acc = 0;
        for (int j = 0; j < 16; ++j) acc += m[i][j] * x[j];
        n2 += acc * acc;
    }
    return std::sqrt(n2);
}

}  // namespace

double max_annihilation_residual() {
    Vec16 eta = unit_spinor();
    double worst = 0;
    for (const auto& op : holonomy_operators()) worst = std::max(worst, apply_norm(op, eta));
    return worst;
}

Mat16 covariant_derivative_operator(const TriadJet<double>& t, int C) {
    Mat16 out{};
    for (int A = 0; A < 8; ++A)
        for (int B = A + 1; B < 8; ++B) {
            double w = connection_entry(A, B, C, t).v;
            if (w == 0.0) continue;
            IMat16 gAB = gamma_product(A, B);
            for (int i = 0; i < 16; ++i)
                for (int j = 0; j < 16; ++j) out[i][j] += w * gAB[i][j];
        }
    return out;
}

double spinor_derivative_residual(const TriadJet<double>& t) {
    Vec16 eta = unit_spinor();
    double worst = 0;
    for (int C = 0; C < 8; ++C) {
        Mat16 O = covariant_derivative_operator(t, C);
        double n2 = 0;
        for (int i = 0; i < 16; ++i) {
            double acc = 0;
            for (int j = 0; j < 16; ++j) acc += O[i][j] * eta[j];
            n2 += acc * acc;
        }
        worst = std::max(worst, std::sqrt(n2));
    }
    return worst;
}

double cayley_coefficient(int A, int B, int C, int D) {
    Vec16 eta = unit_spinor();
    IMat16 m = gamma_product4(A, B, C, D);
    double val = 0;
    for (int i = 0; i < 16; ++i) {
        double acc = 0;
        for (int j = 0; j < 16; ++j) acc += m[i][j] * eta[j];
        val += eta[i] * acc;
    }
    return val;
}

Form<double> cayley_form() {
    Form<double> phi;
    for (int A = 0; A < 8; ++A)
        for (int B = A + 1; B < 8; ++B)
            for (int C = B + 1; C < 8; ++C)
                for (int D = C + 1; D < 8; ++D) {
                    double c = cayley_coefficient(A, B, C, D);
                    if (std::fabs(c) > 1e-14) {
                        Mask m = Mask((1u << A) | (1u << B) | (1u << C) | (1u << D));
                        form_add_term(phi, m, c);
                    }
                }
    return phi;
}

double form_on_vectors(const Form<double>& phi,
                       const std::array<std::array<double, 8>, 4>& X) {
    double total = 0;
    for (const auto& [mask, coef] : phi) {
        int idx[4], n = 0;
        for (int b = 0; b < 16; ++b)
            if (mask & (Mask(1) << b)) idx[n++] = b;
        // 4x4 determinant of the rows picked out by the monomial
        double m[4][4];
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) m[i][j] = X[j][idx[i]];
        double det = 0;
        static const int perm[24][4] = {
            {0,1,2,3},{0,1,3,2},{0,2,1,3},{0,2,3,1},{0,3,1,2},{0,3,2,1},
            {1,0,2,3},{1,0,3,2},{1,2,0,3},{1,2,3,0},{1,3,0,2},{1,3,2,0},
            {2,0,1,3},{2,0,3,1},{2,1,0,3},{2,1,3,0},{2,3,0,1},{2,3,1,0},
            {3,0,1,2},{3,0,2,1},{3,1,0,2},{3,1,2,0},{3,2,0,1},{3,2,1,0}};
        static const int psgn[24] = {1,-1,-1,1,1,-1,-1,1,1,-1,-1,1,1,-1,-1,1,1,-1,-1,1,1,-1,-1,1};
        for (int p = 0; p < 24; ++p)
            det += psgn[p] * m[0][perm[p][0]] * m[1][perm[p][1]] * m[2][perm[p][2]] * m[3][perm[p][3]];
        total += coef * det;
    }
    return total;
}

bool orthonormalize(std::array<std::array<double, 8>, 4>& X) {
    for (int i = 0; i < 4; ++i) {
        for (int k = 0; k < i; ++k) {
            double dot = 0;
            for (int c = 0; c < 8; ++c) dot += X[i][c] * X[k][c];
            for (int c = 0; c < 8; ++c) X[i][c] -= dot * X[k][c];
        }
        double n2 = 0;
        for (int c = 0; c < 8; ++c) n2 += X[i][c] * X[i][c];
        if (n2 < 1e-20) return false;
        double inv = 1.0 / std::sqrt(n2);
        for (int c = 0; c < 8; ++c) X[i][c] *= inv;
    }
    return true;
}

}  // namespace spin7
