#include "schurweyl/tensor_state.hpp"

#include "schurweyl/error.hpp"

#include <atomic>
#include <cstdlib>
#include <string>

namespace schurweyl {

namespace {

std::atomic<std::int64_t> g_cap_override{0};

std::int64_t environment_cap() {
    static const std::int64_t cap = [] {
        if (const char *env = std::getenv("SCHURWEYL_CAP")) {
            char *end = nullptr;
            const long long v = std::strtoll(env, &end, 10);
            if (end != env && *end == '\0' && v > 0)
                return static_cast<std::int64_t>(v);
        }
        return kDefaultDimensionCap;
    }();
    return cap;
}

std::int64_t power(int base, int exponent, std::int64_t limit) {
    std::int64_t out = 1;
    for (int i = 0; i < exponent; ++i) {
        out *= base;
        if (out > limit)
            return limit + 1;
    }
    return out;
}

std::vector<std::int64_t> strides(int d, int n) {
    std::vector<std::int64_t> s(static_cast<std::size_t>(n));
    std::int64_t acc = 1;
    for (int p = n - 1; p >= 0; --p) {
        s[static_cast<std::size_t>(p)] = acc;
        acc *= d;
    }
    return s;
}

} // namespace

std::int64_t dimension_cap() {
    const auto override_cap = g_cap_override.load();
    return override_cap > 0 ? override_cap : environment_cap();
}

void set_dimension_cap(std::int64_t cap) { g_cap_override.store(cap > 0 ? cap : 0); }

std::int64_t checked_dimension(int local_dim, int n_factors) {
    if (local_dim < 1)
        throw InvalidArgument("local dimension d must be >= 1");
    if (n_factors < 0)
        throw InvalidArgument("number of factors must be >= 0");
    const auto cap = dimension_cap();
    const auto dim = power(local_dim, n_factors, cap);
    if (dim > cap)
        throw DimensionCapExceeded("d^N = " + std::to_string(local_dim) + "^" + std::to_string(n_factors) +
                                   " exceeds the cap of " + std::to_string(cap) +
                                   " (set SCHURWEYL_CAP to raise it)");
    return dim;
}

TensorState::TensorState(int local_dim, int n_factors)
    : local_dim_(local_dim), n_factors_(n_factors),
      amplitudes_(Eigen::VectorXcd::Zero(checked_dimension(local_dim, n_factors))) {}

TensorState::TensorState(int local_dim, int n_factors, Eigen::VectorXcd amplitudes)
    : local_dim_(local_dim), n_factors_(n_factors), amplitudes_(std::move(amplitudes)) {
    if (amplitudes_.size() != checked_dimension(local_dim, n_factors))
        throw InvalidArgument("amplitude count does not match d^N");
}

TensorState TensorState::basis_state(int local_dim, std::span<const int> digits) {
    const int n = static_cast<int>(digits.size());
    TensorState out(local_dim, n);
    std::int64_t index = 0;
    for (int digit : digits) {
        if (digit < 0 || digit >= local_dim)
            throw InvalidArgument("basis digit out of range");
        index = index * local_dim + digit;
    }
    out.amplitudes_[index] = 1.0;
    return out;
}

TensorState TensorState::basis_state(int local_dim, std::initializer_list<int> digits) {
    return basis_state(local_dim, std::span<const int>(digits.begin(), digits.size()));
}

TensorState TensorState::basis_index(int local_dim, int n_factors, std::int64_t flat_index) {
    TensorState out(local_dim, n_factors);
    if (flat_index < 0 || flat_index >= out.size())
        throw InvalidArgument("flat index out of range");
    out.amplitudes_[flat_index] = 1.0;
    return out;
}

TensorState TensorState::random(int local_dim, int n_factors, std::mt19937_64 &rng) {
    TensorState out(local_dim, n_factors);
    std::normal_distribution<double> gauss;
    for (Eigen::Index i = 0; i < out.amplitudes_.size(); ++i) {
        const double re = gauss(rng);
        const double im = gauss(rng);
        out.amplitudes_[i] = Complex(re, im);
    }
    out.amplitudes_.normalize();
    return out;
}

TensorState TensorState::vector(std::span<const Complex> components) {
    Eigen::VectorXcd v(static_cast<Eigen::Index>(components.size()));
    for (std::size_t i = 0; i < components.size(); ++i)
        v[static_cast<Eigen::Index>(i)] = components[i];
    return TensorState(static_cast<int>(components.size()), 1, std::move(v));
}

TensorState TensorState::normalized() const {
    const double n = norm();
    if (n == 0.0)
        throw InvalidArgument("cannot normalize the zero vector");
    TensorState out = *this;
    out.amplitudes_ /= n;
    return out;
}

Complex TensorState::inner(const TensorState &other) const {
    require_same_space(*this, other);
    return amplitudes_.dot(other.amplitudes_); // Eigen's dot conjugates the left side
}

void require_same_space(const TensorState &a, const TensorState &b) {
    if (a.local_dim() != b.local_dim() || a.n_factors() != b.n_factors())
        throw InvalidArgument("states live on different tensor spaces");
}

TensorState operator+(const TensorState &a, const TensorState &b) {
    require_same_space(a, b);
    return TensorState(a.local_dim_, a.n_factors_, a.amplitudes_ + b.amplitudes_);
}

TensorState operator-(const TensorState &a, const TensorState &b) {
    require_same_space(a, b);
    return TensorState(a.local_dim_, a.n_factors_, a.amplitudes_ - b.amplitudes_);
}

TensorState operator*(Complex c, const TensorState &a) {
    return TensorState(a.local_dim_, a.n_factors_, c * a.amplitudes_);
}

TensorState tensor_product(const TensorState &a, const TensorState &b) {
    if (a.local_dim() != b.local_dim())
        throw InvalidArgument("tensor product of states with different local dimension");
    const int n = a.n_factors() + b.n_factors();
    checked_dimension(a.local_dim(), n);
    Eigen::VectorXcd v(a.size() * b.size());
    for (Eigen::Index i = 0; i < a.size(); ++i)
        v.segment(i * b.size(), b.size()) = a.amplitudes()[i] * b.amplitudes();
    return TensorState(a.local_dim(), n, std::move(v));
}

double distance(const TensorState &a, const TensorState &b) {
    require_same_space(a, b);
    return (a.amplitudes() - b.amplitudes()).norm();
}

void accumulate_permuted(const Permutation &sigma, int local_dim, std::span<const Complex> in,
                         std::span<Complex> out, Complex coeff) {
    const int n = sigma.size();
    const auto s = strides(local_dim, n);
    const std::int64_t total = n == 0 ? 1 : s[0] * local_dim;
    if (static_cast<std::int64_t>(in.size()) != total || static_cast<std::int64_t>(out.size()) != total)
        throw InvalidArgument("buffer size does not match d^N");
    if (sigma.is_identity()) {
        for (std::int64_t i = 0; i < total; ++i)
            out[static_cast<std::size_t>(i)] += coeff * in[static_cast<std::size_t>(i)];
        return;
    }
    // Source digit at position p lands at position sigma(p): target stride of p.
    std::vector<std::int64_t> target_stride(static_cast<std::size_t>(n));
    for (int p = 0; p < n; ++p)
        target_stride[static_cast<std::size_t>(p)] = s[static_cast<std::size_t>(sigma.images()[static_cast<std::size_t>(p)])];

    std::vector<int> digits(static_cast<std::size_t>(n), 0);
    std::int64_t target = 0;
    for (std::int64_t source = 0; source < total; ++source) {
        out[static_cast<std::size_t>(target)] += coeff * in[static_cast<std::size_t>(source)];
        // Odometer increment, least significant (last) position first.
        for (int p = n - 1; p >= 0; --p) {
            auto &digit = digits[static_cast<std::size_t>(p)];
            if (++digit < local_dim) {
                target += target_stride[static_cast<std::size_t>(p)];
                break;
            }
            digit = 0;
            target -= (local_dim - 1) * target_stride[static_cast<std::size_t>(p)];
        }
    }
}

TensorState apply_permutation(const Permutation &sigma, const TensorState &psi) {
    if (sigma.size() != psi.n_factors())
        throw InvalidArgument("permutation size does not match the number of factors");
    Eigen::VectorXcd out = Eigen::VectorXcd::Zero(psi.size());
    accumulate_permuted(sigma, psi.local_dim(),
                        std::span<const Complex>(psi.amplitudes().data(), static_cast<std::size_t>(psi.size())),
                        std::span<Complex>(out.data(), static_cast<std::size_t>(out.size())), 1.0);
    return TensorState(psi.local_dim(), psi.n_factors(), std::move(out));
}

TensorState swap_factors(const TensorState &psi, int k, int l) {
    if (k < 1 || k > psi.n_factors() || l < 1 || l > psi.n_factors())
        throw InvalidArgument("swap_factors index out of range");
    return apply_permutation(Permutation::transposition(psi.n_factors(), k, l), psi);
}

TensorState apply_local(const Eigen::MatrixXcd &u, const TensorState &psi) {
    const int d = psi.local_dim();
    if (u.rows() != d || u.cols() != d)
        throw InvalidArgument("local operator must be d x d");
    // Contract one factor at a time: view the vector as (left, d, right).
    Eigen::VectorXcd v = psi.amplitudes();
    std::int64_t right = psi.size();
    for (int p = 0; p < psi.n_factors(); ++p) {
        right /= d;
        const std::int64_t left = psi.size() / (right * d);
        Eigen::VectorXcd next(v.size());
        for (std::int64_t a = 0; a < left; ++a) {
            for (std::int64_t b = 0; b < right; ++b) {
                for (int i = 0; i < d; ++i) {
                    Complex acc = 0.0;
                    for (int j = 0; j < d; ++j)
                        acc += u(i, j) * v[(a * d + j) * right + b];
                    next[(a * d + i) * right + b] = acc;
                }
            }
        }
        v = std::move(next);
    }
    return TensorState(d, psi.n_factors(), std::move(v));
}

Eigen::MatrixXcd random_unitary(int d, std::mt19937_64 &rng) {
    std::normal_distribution<double> gauss;
    Eigen::MatrixXcd g(d, d);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) {
            const double re = gauss(rng);
            const double im = gauss(rng);
            g(i, j) = Complex(re, im);
        }
    Eigen::HouseholderQR<Eigen::MatrixXcd> qr(g);
    Eigen::MatrixXcd q = qr.householderQ();
    const Eigen::MatrixXcd r = qr.matrixQR().triangularView<Eigen::Upper>();
    // Fix column phases so the distribution is Haar.
    for (int j = 0; j < d; ++j) {
        const Complex diag = r(j, j);
        if (std::abs(diag) > 0.0)
            q.col(j) *= diag / std::abs(diag);
    }
    return q;
}

} // namespace schurweyl
