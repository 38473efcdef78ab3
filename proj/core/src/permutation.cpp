#include "schurweyl/permutation.hpp"

#include "schurweyl/error.hpp"

#include <algorithm>
#include <numeric>

namespace schurweyl {

Permutation::Permutation(int n) {
    if (n < 0)
        throw InvalidArgument("permutation size must be nonnegative");
    images_.resize(static_cast<std::size_t>(n));
    std::iota(images_.begin(), images_.end(), 0);
}

Permutation Permutation::from_images(std::span<const int> one_based_images) {
    const int n = static_cast<int>(one_based_images.size());
    Permutation out(n);
    std::vector<bool> seen(static_cast<std::size_t>(n), false);
    for (int p = 0; p < n; ++p) {
        const int v = one_based_images[static_cast<std::size_t>(p)];
        if (v < 1 || v > n || seen[static_cast<std::size_t>(v - 1)])
            throw InvalidArgument("permutation images must be a bijection of 1..N");
        seen[static_cast<std::size_t>(v - 1)] = true;
        out.images_[static_cast<std::size_t>(p)] = v - 1;
    }
    return out;
}

Permutation Permutation::from_images(std::initializer_list<int> one_based_images) {
    return from_images(std::span<const int>(one_based_images.begin(), one_based_images.size()));
}

Permutation Permutation::transposition(int n, int a, int b) {
    if (a < 1 || a > n || b < 1 || b > n)
        throw InvalidArgument("transposition index out of range");
    Permutation out(n);
    std::swap(out.images_[static_cast<std::size_t>(a - 1)], out.images_[static_cast<std::size_t>(b - 1)]);
    return out;
}

Permutation Permutation::cycle(int n, std::initializer_list<int> one_based_cycle) {
    Permutation out(n);
    const std::vector<int> c(one_based_cycle);
    for (std::size_t i = 0; i < c.size(); ++i) {
        const int from = c[i];
        const int to = c[(i + 1) % c.size()];
        if (from < 1 || from > n || to < 1 || to > n)
            throw InvalidArgument("cycle entry out of range");
        out.images_[static_cast<std::size_t>(from - 1)] = to - 1;
    }
    // Validate bijectivity (repeated cycle entries).
    std::vector<int> one_based;
    for (int v : out.images_)
        one_based.push_back(v + 1);
    return from_images(one_based);
}

Permutation Permutation::random(int n, std::mt19937_64 &rng) {
    Permutation out(n);
    std::shuffle(out.images_.begin(), out.images_.end(), rng);
    return out;
}

int Permutation::operator()(int p) const {
    if (p < 1 || p > size())
        throw InvalidArgument("permutation argument out of range");
    return images_[static_cast<std::size_t>(p - 1)] + 1;
}

Permutation Permutation::inverse() const {
    Permutation out(size());
    for (std::size_t p = 0; p < images_.size(); ++p)
        out.images_[static_cast<std::size_t>(images_[p])] = static_cast<int>(p);
    return out;
}

bool Permutation::is_identity() const noexcept {
    for (std::size_t p = 0; p < images_.size(); ++p)
        if (images_[p] != static_cast<int>(p))
            return false;
    return true;
}

int Permutation::sign() const {
    int parity = 0;
    for (int len : cycle_type())
        parity += len - 1;
    return parity % 2 == 0 ? 1 : -1;
}

std::vector<int> Permutation::cycle_type() const {
    std::vector<bool> seen(images_.size(), false);
    std::vector<int> out;
    for (std::size_t p = 0; p < images_.size(); ++p) {
        if (seen[p])
            continue;
        int len = 0;
        for (std::size_t q = p; !seen[q]; q = static_cast<std::size_t>(images_[q])) {
            seen[q] = true;
            ++len;
        }
        out.push_back(len);
    }
    std::sort(out.begin(), out.end(), std::greater<>());
    return out;
}

std::vector<int> Permutation::adjacent_factorization() const {
    // Bubble-sort the one-line word w = (sigma(1), ..., sigma(N)). Each swap of
    // positions k, k+1 right-multiplies by s_k, so w * s_{j_1} ... s_{j_m} = id
    // and sigma = s_{j_m} ... s_{j_1}.
    std::vector<int> word = images_;
    std::vector<int> swaps;
    const std::size_t n = word.size();
    for (std::size_t pass = 0; pass + 1 < n; ++pass) {
        for (std::size_t k = 0; k + 1 < n - pass; ++k) {
            if (word[k] > word[k + 1]) {
                std::swap(word[k], word[k + 1]);
                swaps.push_back(static_cast<int>(k) + 1);
            }
        }
    }
    std::reverse(swaps.begin(), swaps.end());
    return swaps;
}

Permutation Permutation::embedded(int n, int offset) const {
    if (offset < 0 || offset + size() > n)
        throw InvalidArgument("embedding does not fit");
    Permutation out(n);
    for (int p = 0; p < size(); ++p)
        out.images_[static_cast<std::size_t>(offset + p)] = offset + images_[static_cast<std::size_t>(p)];
    return out;
}

Permutation operator*(const Permutation &sigma, const Permutation &tau) {
    if (sigma.size() != tau.size())
        throw InvalidArgument("composing permutations of different sizes");
    Permutation out(sigma.size());
    for (std::size_t p = 0; p < tau.images_.size(); ++p)
        out.images_[p] = sigma.images_[static_cast<std::size_t>(tau.images_[p])];
    return out;
}

std::string to_string(const Permutation &sigma) {
    std::string out = "[";
    for (int p = 1; p <= sigma.size(); ++p) {
        if (p > 1)
            out += ',';
        out += std::to_string(sigma(p));
    }
    return out + "]";
}

std::vector<Permutation> permutations_of(int n, std::span<const int> symbols) {
    std::vector<int> sorted(symbols.begin(), symbols.end());
    std::sort(sorted.begin(), sorted.end());
    for (int s : sorted)
        if (s < 1 || s > n)
            throw InvalidArgument("symbol out of range");
    std::vector<Permutation> out;
    std::vector<int> arrangement = sorted;
    do {
        std::vector<int> images(static_cast<std::size_t>(n));
        std::iota(images.begin(), images.end(), 1);
        for (std::size_t i = 0; i < sorted.size(); ++i)
            images[static_cast<std::size_t>(sorted[i] - 1)] = arrangement[i];
        out.push_back(Permutation::from_images(images));
    } while (std::next_permutation(arrangement.begin(), arrangement.end()));
    return out;
}

} // namespace schurweyl
