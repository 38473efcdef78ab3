#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <random>
#include <span>
#include <string>
#include <vector>

namespace schurweyl {

/// A permutation of {1, ..., N}. Stored 0-based: images()[p] = sigma(p+1) - 1.
///
/// Composition follows function composition: (sigma * tau)(p) = sigma(tau(p)).
class Permutation {
  public:
    /// Identity on n symbols.
    explicit Permutation(int n = 0);

    /// From 1-based images [sigma(1), ..., sigma(N)]. Throws InvalidArgument unless bijective.
    static Permutation from_images(std::span<const int> one_based_images);
    static Permutation from_images(std::initializer_list<int> one_based_images);

    /// The transposition (a b), 1-based.
    static Permutation transposition(int n, int a, int b);

    /// Cycle notation, 1-based, e.g. cycle(3, {1, 2, 3}) maps 1->2->3->1.
    static Permutation cycle(int n, std::initializer_list<int> one_based_cycle);

    static Permutation random(int n, std::mt19937_64 &rng);

    int size() const noexcept { return static_cast<int>(images_.size()); }

    /// sigma(p), both 1-based.
    int operator()(int p) const;

    const std::vector<int> &images() const noexcept { return images_; }

    Permutation inverse() const;
    bool is_identity() const noexcept;

    /// +1 or -1.
    int sign() const;

    /// Cycle lengths in decreasing order.
    std::vector<int> cycle_type() const;

    /// Adjacent transpositions k (meaning (k k+1), 1-based) with
    /// sigma = s_{k_1} s_{k_2} ... s_{k_m}, from a bubble sort.
    std::vector<int> adjacent_factorization() const;

    /// Identity on positions outside [offset, offset+size()); extends to n symbols.
    Permutation embedded(int n, int offset) const;

    friend Permutation operator*(const Permutation &sigma, const Permutation &tau);
    friend bool operator==(const Permutation &, const Permutation &) = default;
    friend auto operator<=>(const Permutation &, const Permutation &) = default;

  private:
    std::vector<int> images_;
};

std::string to_string(const Permutation &sigma); // one-line notation "[2,1,3]"

/// All permutations of the given symbols (1-based values), as permutations of n.
/// Each returned permutation fixes every symbol outside `symbols`.
std::vector<Permutation> permutations_of(int n, std::span<const int> symbols);

} // namespace schurweyl
