#include "lp.hpp"

#include <cmath>
#include <limits>
#include <utility>
#include <vector>

namespace concavlab::detail {

namespace {

class Tableau {
public:
    Tableau(const Eigen::MatrixXd& A, const Eigen::VectorXd& b, const Eigen::VectorXd& c, double eps)
        : m_(static_cast<int>(b.size())), n_(static_cast<int>(c.size())), eps_(eps),
          nonbasic_(n_ + 1), basic_(m_), D_(Eigen::MatrixXd::Zero(m_ + 2, n_ + 2)) {
        D_.topLeftCorner(m_, n_) = A;
        for (int i = 0; i < m_; ++i) {
            basic_[i] = n_ + i;
            D_(i, n_) = -1.0;
            D_(i, n_ + 1) = b(i);
        }
        for (int j = 0; j < n_; ++j) {
            nonbasic_[j] = j;
            D_(m_, j) = -c(j);
        }
        nonbasic_[n_] = -1;
        D_(m_ + 1, n_) = 1.0;
    }

    LpResult solve() {
        int r = 0;
        for (int i = 1; i < m_; ++i)
            if (D_(i, n_ + 1) < D_(r, n_ + 1)) r = i;
        if (m_ > 0 && D_(r, n_ + 1) < -eps_) {
            pivot(r, n_);
            if (!run(2) || D_(m_ + 1, n_ + 1) < -eps_) return {LpStatus::Infeasible, {}, 0.0};
            for (int i = 0; i < m_; ++i) {
                if (basic_[i] != -1) continue;
                int s = 0;
                for (int j = 1; j <= n_; ++j)
                    if (better(D_(i, j), nonbasic_[j], D_(i, s), nonbasic_[s])) s = j;
                pivot(i, s);
            }
        }
        const bool bounded = run(1);
        Eigen::VectorXd x = Eigen::VectorXd::Zero(n_);
        for (int i = 0; i < m_; ++i)
            if (basic_[i] >= 0 && basic_[i] < n_) x(basic_[i]) = D_(i, n_ + 1);
        if (!bounded) return {LpStatus::Unbounded, x, std::numeric_limits<double>::infinity()};
        return {LpStatus::Optimal, x, D_(m_, n_ + 1)};
    }

private:
    static bool better(double v, int id, double best_v, int best_id) {
        return v < best_v || (v == best_v && id < best_id);
    }

    void pivot(int r, int s) {
        const double inv = 1.0 / D_(r, s);
        for (int i = 0; i < m_ + 2; ++i) {
            if (i == r || std::abs(D_(i, s)) <= eps_) continue;
            const double f = D_(i, s) * inv;
            for (int j = 0; j < n_ + 2; ++j) D_(i, j) -= D_(r, j) * f;
            D_(i, s) = D_(r, s) * f;
        }
        for (int j = 0; j < n_ + 2; ++j)
            if (j != s) D_(r, j) *= inv;
        for (int i = 0; i < m_ + 2; ++i)
            if (i != r) D_(i, s) *= -inv;
        D_(r, s) = inv;
        std::swap(basic_[r], nonbasic_[s]);
    }

    bool run(int phase) {
        const int row = m_ + phase - 1;
        for (int guard = 0; guard < 50000; ++guard) {
            int s = -1;
            for (int j = 0; j <= n_; ++j) {
                if (nonbasic_[j] == -phase) continue;
                if (s == -1 || better(D_(row, j), nonbasic_[j], D_(row, s), nonbasic_[s])) s = j;
            }
            if (D_(row, s) >= -eps_) return true;
            int r = -1;
            for (int i = 0; i < m_; ++i) {
                if (D_(i, s) <= eps_) continue;
                if (r == -1) {
                    r = i;
                    continue;
                }
                const double lhs = D_(i, n_ + 1) / D_(i, s);
                const double rhs = D_(r, n_ + 1) / D_(r, s);
                if (lhs < rhs || (lhs == rhs && basic_[i] < basic_[r])) r = i;
            }
            if (r == -1) return false;
            pivot(r, s);
        }
        return true;
    }

    int m_, n_;
    double eps_;
    std::vector<int> nonbasic_, basic_;
    Eigen::MatrixXd D_;
};

} // namespace

LpResult solve_lp(const Eigen::MatrixXd& A, const Eigen::VectorXd& b, const Eigen::VectorXd& c, double eps) {
    Tableau t(A, b, c, eps);
    return t.solve();
}

} // namespace concavlab::detail
