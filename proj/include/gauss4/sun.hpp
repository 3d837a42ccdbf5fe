#ifndef GAUSS4_SUN_HPP
#define GAUSS4_SUN_HPP

#include <cmath>
#include <complex>
#include <map>
#include <vector>

#include "gauss4/configuration.hpp"

namespace gauss4 {

struct UnsupportedDiagram : Error {
    using Error::Error;
};

// Trace-orthonormal basis of su(N) in the fundamental representation:
// Tr(T^a T^b) = delta^{ab}/2, traceless, Hermitian.
struct SunBasis {
    int N = 0;
    std::vector<std::vector<std::complex<double>>> matrices; // N^2-1 flat NxN
};

inline SunBasis sun_basis(int N) {
    using C = std::complex<double>;
    SunBasis b;
    b.N = N;
    auto mat = [&]() { return std::vector<C>(N * N, C(0)); };
    // off-diagonal pairs, generalized Gell-Mann rescaled by 1/2
    for (int i = 0; i < N; ++i)
        for (int j = i + 1; j < N; ++j) {
            auto s = mat();
            s[i * N + j] = C(0.5);
            s[j * N + i] = C(0.5);
            b.matrices.push_back(std::move(s));
            auto a = mat();
            a[i * N + j] = C(0, -0.5);
            a[j * N + i] = C(0, 0.5);
            b.matrices.push_back(std::move(a));
        }
    // diagonal tower
    for (int l = 1; l < N; ++l) {
        auto d = mat();
        const double norm = 1.0 / std::sqrt(2.0 * l * (l + 1));
        for (int i = 0; i < l; ++i) d[i * N + i] = C(norm);
        d[l * N + l] = C(-l * norm);
        b.matrices.push_back(std::move(d));
    }
    return b;
}

// Largest |Tr(T^a T^b) - delta^{ab}/2| over the basis.
inline double orthonormality_residual(const SunBasis& b) {
    const int N = b.N;
    double worst = 0;
    for (std::size_t a = 0; a < b.matrices.size(); ++a)
        for (std::size_t c = 0; c < b.matrices.size(); ++c) {
            std::complex<double> tr(0);
            for (int i = 0; i < N; ++i)
                for (int k = 0; k < N; ++k) tr += b.matrices[a][i * N + k] * b.matrices[c][k * N + i];
            const double want = a == c ? 0.5 : 0.0;
            worst = std::max(worst, std::abs(tr - want));
        }
    return worst;
}

// Brute-force weight of a pure chord diagram: (1/N^n) sum over labelings of
// the product over circles of Tr of the ordered generator product. Returns
// the value of W/x^degree.
inline std::complex<double> eval_chord_weight(const Configuration& D, const SunBasis& basis) {
    for (const auto& [id, m] : D.multiplicity)
        if (m != 1) throw UnsupportedDiagram("chord multiplicities must be 1");
    const int N = basis.N;
    const int dim = N * N - 1;
    const std::set<int> id_set = D.chord_ids();
    std::vector<int> chords(id_set.begin(), id_set.end());
    std::map<int, int> index;
    for (std::size_t i = 0; i < chords.size(); ++i) index[chords[i]] = static_cast<int>(i);
    const std::size_t m = chords.size();

    std::vector<int> label(m, 0);
    std::complex<double> total(0);
    while (true) {
        std::complex<double> prod(1);
        for (const auto& word : D.circles) {
            // trace of the ordered product along the circle
            std::vector<std::complex<double>> acc(N * N, 0);
            for (int i = 0; i < N; ++i) acc[i * N + i] = 1;
            for (int id : word) {
                const auto& T = basis.matrices[label[index[id]]];
                std::vector<std::complex<double>> next(N * N, 0);
                for (int i = 0; i < N; ++i)
                    for (int k = 0; k < N; ++k) {
                        if (acc[i * N + k] == std::complex<double>(0)) continue;
                        for (int j = 0; j < N; ++j) next[i * N + j] += acc[i * N + k] * T[k * N + j];
                    }
                acc = std::move(next);
            }
            std::complex<double> tr(0);
            for (int i = 0; i < N; ++i) tr += acc[i * N + i];
            prod *= tr;
        }
        total += prod;
        // next labeling
        std::size_t k = 0;
        while (k < m && ++label[k] == dim) label[k++] = 0;
        if (k == m) break;
    }
    double scale = 1;
    for (std::size_t i = 0; i < D.circles.size(); ++i) scale /= N;
    return total * scale;
}

} // namespace gauss4

#endif
