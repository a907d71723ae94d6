#include <sskcf/spectral.hpp>

#include <catch2/catch_amalgamated.hpp>

#include "oracles.hpp"

#include <algorithm>
#include <complex>
#include <random>

using namespace sskcf;

namespace {

double max_abs(const RealGrid& g) {
    double m = 0.0;
    for (double x : g.v) m = std::max(m, std::abs(x));
    return m;
}

double max_diff(const RealGrid& a, const RealGrid& b) {
    REQUIRE(a.same_shape(b));
    double m = 0.0;
    for (int i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a.v[i] - b.v[i]));
    return m;
}

double max_diff(const SpectralGrid& a, const SpectralGrid& b) {
    REQUIRE(a.same_shape(b));
    double m = 0.0;
    for (int i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a.v[i] - b.v[i]));
    return m;
}

double max_abs(const SpectralGrid& s) {
    double m = 0.0;
    for (const auto& x : s.v) m = std::max(m, std::abs(x));
    return m;
}

}  // namespace

TEST_CASE("dft2 of a delta impulse is an all-ones spectrum", "[spectral]") {
    RealGrid g(4, 5);
    g.at(0, 0) = 1.0;
    SpectralGrid s = dft2(g);
    for (const auto& b : s.v) {
        CHECK(b.real() == Catch::Approx(1.0).margin(1e-12));
        CHECK(b.imag() == Catch::Approx(0.0).margin(1e-12));
    }
}

TEST_CASE("dft2 of a constant grid concentrates at the DC bin", "[spectral]") {
    const double c = 2.75;
    RealGrid g(3, 4, c);
    SpectralGrid s = dft2(g);
    CHECK(std::abs(s.at(0, 0) - std::complex<double>(c * 12.0, 0.0)) < 1e-10);
    for (int m = 0; m < 3; ++m)
        for (int n = 0; n < 4; ++n)
            if (m != 0 || n != 0) CHECK(std::abs(s.at(m, n)) < 1e-10);
}

TEST_CASE("dft2 matches direct O(n^2) summation on random grids", "[spectral]") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 8; ++trial) {
        RealGrid g = oracle::random_grid(rng, 4, 4);
        CHECK(max_diff(dft2(g), oracle::naive_dft2(g)) < 1e-10);
    }
    RealGrid g = oracle::random_grid(rng, 5, 3);
    CHECK(max_diff(dft2(g), oracle::naive_dft2(g)) < 1e-10);
}

TEST_CASE("idft2 inverts dft2 on random grids", "[spectral]") {
    std::mt19937_64 rng(12);
    for (auto [r, c] : {std::pair{4, 4}, {7, 5}, {1, 8}, {16, 16}}) {
        RealGrid g = oracle::random_grid(rng, r, c, -5.0, 5.0);
        RealGrid back = idft2(dft2(g));
        CHECK(max_diff(back, g) < 1e-9 * std::max(1.0, max_abs(g)));
    }
}

TEST_CASE("idft2 of an all-ones spectrum is a delta impulse", "[spectral]") {
    SpectralGrid s(4, 4, {1.0, 0.0});
    RealGrid g = idft2(s);
    CHECK(g.at(0, 0) == Catch::Approx(1.0).margin(1e-12));
    for (int m = 0; m < 4; ++m)
        for (int n = 0; n < 4; ++n)
            if (m != 0 || n != 0) CHECK(std::abs(g.at(m, n)) < 1e-12);
}

TEST_CASE("idft2 of a forced conjugate-symmetric spectrum is real", "[spectral]") {
    std::mt19937_64 rng(13);
    const int M = 6, N = 4;
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    SpectralGrid s(M, N);
    for (int m = 0; m < M; ++m)
        for (int n = 0; n < N; ++n) s.at(m, n) = {dist(rng), dist(rng)};
    SpectralGrid sym(M, N);
    for (int m = 0; m < M; ++m)
        for (int n = 0; n < N; ++n) {
            int rm = (M - m) % M, rn = (N - n) % N;
            sym.at(m, n) = 0.5 * (s.at(m, n) + std::conj(s.at(rm, rn)));
        }

    std::vector<std::complex<double>> buf = sym.v;
    sskcf::detail::execute_inplace(buf, M, N, FFTW_BACKWARD);
    double max_imag = 0.0, max_mag = 0.0;
    for (const auto& x : buf) {
        max_imag = std::max(max_imag, std::abs(x.imag()));
        max_mag = std::max(max_mag, std::abs(x));
    }
    CHECK(max_imag < 1e-9 * std::max(1.0, max_mag));
}

TEST_CASE("circ_shift identities", "[spectral]") {
    std::mt19937_64 rng(14);
    RealGrid g = oracle::random_grid(rng, 5, 7);
    CHECK(max_diff(circ_shift(g, 0, 0), g) == 0.0);
    CHECK(max_diff(circ_shift(g, 5, 7), g) == 0.0);
    CHECK(max_diff(circ_shift(circ_shift(g, 1, 0), -1, 0), g) == 0.0);
    CHECK(max_diff(circ_shift(circ_shift(g, 3, -2), -3, 2), g) == 0.0);
    RealGrid s = circ_shift(g, 2, 3);
    CHECK(s.at(2, 3) == g.at(0, 0));
}

TEST_CASE("linear kernel spectrum of x with itself is |x_hat|^2", "[spectral]") {
    std::mt19937_64 rng(15);
    RealGrid g = oracle::random_grid(rng, 4, 4);
    MultiChannelGrid x(std::vector<RealGrid>{g});
    SpectralGrid k = linear_kernel_spectrum(x, x);
    SpectralGrid gh = dft2(g);
    for (int i = 0; i < k.size(); ++i) {
        CHECK(k.v[i].real() == Catch::Approx(std::norm(gh.v[i])).margin(1e-9));
        CHECK(std::abs(k.v[i].imag()) < 1e-9);
    }
}

TEST_CASE("linear kernel spectrum of delta with delta is all ones", "[spectral]") {
    RealGrid d(3, 3);
    d.at(0, 0) = 1.0;
    MultiChannelGrid x(std::vector<RealGrid>{d});
    SpectralGrid k = linear_kernel_spectrum(x, x);
    for (const auto& b : k.v) CHECK(std::abs(b - std::complex<double>(1.0, 0.0)) < 1e-12);
}

TEST_CASE("linear kernel matches the dense circulant product row", "[spectral]") {
    std::mt19937_64 rng(16);
    MultiChannelGrid x = oracle::random_multi(rng, 2, 4, 4);
    MultiChannelGrid z = oracle::random_multi(rng, 2, 4, 4);

    Eigen::MatrixXd xzT = Eigen::MatrixXd::Zero(16, 16);
    for (int c = 0; c < 2; ++c)
        xzT += oracle::circulant_matrix(x.channels[c]) *
               oracle::circulant_matrix(z.channels[c]).transpose();

    RealGrid spatial = oracle::naive_idft2(linear_kernel_spectrum(x, z));
    for (int i = 0; i < 16; ++i) CHECK(spatial.v[i] == Catch::Approx(xzT(0, i)).margin(1e-9));

    RealGrid brute = oracle::linear_kernel_by_shifts(x, z);
    CHECK(max_diff(spatial, brute) < 1e-9);
}

TEST_CASE("linear kernel rejects shape mismatches", "[spectral]") {
    MultiChannelGrid a(std::vector<RealGrid>{RealGrid(4, 4)});
    MultiChannelGrid b(std::vector<RealGrid>{RealGrid(4, 5)});
    CHECK_THROWS_AS(linear_kernel_spectrum(a, b), std::invalid_argument);
}

TEST_CASE("gaussian kernel map is 1 at zero shift for x == z", "[spectral]") {
    std::mt19937_64 rng(17);
    MultiChannelGrid x = oracle::random_multi(rng, 2, 4, 4);
    RealGrid kmap = oracle::naive_idft2(gaussian_kernel_spectrum(x, x, 0.5));
    CHECK(kmap.at(0, 0) == Catch::Approx(1.0).margin(1e-9));
}

TEST_CASE("gaussian kernel map values stay in (0, 1]", "[spectral]") {
    std::mt19937_64 rng(18);
    MultiChannelGrid x = oracle::random_multi(rng, 3, 5, 4);
    MultiChannelGrid z = oracle::random_multi(rng, 3, 5, 4);
    RealGrid kmap = oracle::naive_idft2(gaussian_kernel_spectrum(x, z, 0.7));
    for (double v : kmap.v) {
        CHECK(v > 0.0);
        CHECK(v <= 1.0 + 1e-12);
    }
}

TEST_CASE("gaussian kernel matches exhaustive shift evaluation", "[spectral]") {
    std::mt19937_64 rng(19);
    MultiChannelGrid x = oracle::random_multi(rng, 2, 3, 3);
    MultiChannelGrid z = oracle::random_multi(rng, 2, 3, 3);
    RealGrid kmap = oracle::naive_idft2(gaussian_kernel_spectrum(x, z, 0.5));
    RealGrid brute = oracle::gaussian_kernel_by_shifts(x, z, 0.5);
    CHECK(max_diff(kmap, brute) < 1e-10);
}

TEST_CASE("gaussian kernel spectrum of x with itself is real and symmetric", "[spectral]") {
    std::mt19937_64 rng(20);
    MultiChannelGrid x = oracle::random_multi(rng, 2, 4, 6);
    SpectralGrid k = gaussian_kernel_spectrum(x, x, 0.5);
    const int M = k.rows, N = k.cols;
    double scale = max_abs(k);
    for (int m = 0; m < M; ++m)
        for (int n = 0; n < N; ++n) {
            CHECK(std::abs(k.at(m, n).imag()) < 1e-9 * scale);
            int rm = (M - m) % M, rn = (N - n) % N;
            CHECK(std::abs(k.at(m, n) - std::conj(k.at(rm, rn))) < 1e-9 * scale);
        }
}

TEST_CASE("dense_circulant of [a, b] is [[a, b], [b, a]]", "[spectral]") {
    RealGrid x(1, 2);
    x.at(0, 0) = 3.0;
    x.at(0, 1) = 4.0;
    DenseMatrix m = dense_circulant(x);
    CHECK(m.at(0, 0) == 3.0);
    CHECK(m.at(0, 1) == 4.0);
    CHECK(m.at(1, 0) == 4.0);
    CHECK(m.at(1, 1) == 3.0);
}

TEST_CASE("dense_circulant eigenvalues equal the dft2 bins as a multiset", "[spectral]") {
    std::mt19937_64 rng(21);
    RealGrid x = oracle::random_grid(rng, 3, 4);
    DenseMatrix m = dense_circulant(x);
    Eigen::MatrixXd em(m.n, m.n);
    for (int r = 0; r < m.n; ++r)
        for (int c = 0; c < m.n; ++c) em(r, c) = m.at(r, c);
    Eigen::EigenSolver<Eigen::MatrixXd> es(em);
    std::vector<std::complex<double>> eig(m.n);
    for (int i = 0; i < m.n; ++i) eig[i] = es.eigenvalues()(i);

    SpectralGrid bins = oracle::naive_dft2(x);
    std::vector<bool> used(m.n, false);
    for (const auto& b : bins.v) {
        double best = 1e18;
        int best_i = -1;
        for (int i = 0; i < m.n; ++i) {
            if (used[i]) continue;
            double d = std::abs(eig[i] - b);
            if (d < best) {
                best = d;
                best_i = i;
            }
        }
        REQUIRE(best_i >= 0);
        used[best_i] = true;
        CHECK(best < 1e-8);
    }
}

TEST_CASE("dense_circulant matvec agrees with the spectral matvec", "[spectral]") {
    std::mt19937_64 rng(22);
    for (auto [r, c] : {std::pair{4, 4}, {8, 8}, {3, 5}}) {
        RealGrid x = oracle::random_grid(rng, r, c);
        RealGrid v = oracle::random_grid(rng, r, c);
        DenseMatrix m = dense_circulant(x);
        const int n = m.n;
        RealGrid dense(r, c);
        for (int i = 0; i < n; ++i) {
            double acc = 0.0;
            for (int j = 0; j < n; ++j) acc += m.at(i, j) * v.v[j];
            dense.v[i] = acc;
        }

        SpectralGrid prod(r, c);
        SpectralGrid xh = dft2(x), vh = dft2(v);
        for (int i = 0; i < prod.size(); ++i) prod.v[i] = xh.v[i] * vh.v[i];
        RealGrid spectral = idft2(prod);

        RealGrid direct = oracle::naive_convolve(x, v);
        double scale = std::max(1.0, max_abs(direct));
        CHECK(max_diff(dense, spectral) < 1e-8 * scale);
        CHECK(max_diff(dense, direct) < 1e-8 * scale);
    }
}

TEST_CASE("dense_circulant enforces its size guard", "[spectral]") {
    CHECK_THROWS_AS(dense_circulant(RealGrid(17, 16)), std::invalid_argument);
    CHECK_NOTHROW(dense_circulant(RealGrid(16, 16)));
}

TEST_CASE("Parseval holds under the unnormalized convention", "[spectral]") {
    std::mt19937_64 rng(23);
    for (auto [r, c] : {std::pair{4, 4}, {6, 9}, {16, 16}}) {
        RealGrid g = oracle::random_grid(rng, r, c, -3.0, 3.0);
        double spatial = 0.0;
        for (double x : g.v) spatial += x * x;
        SpectralGrid s = dft2(g);
        double spectral = 0.0;
        for (const auto& b : s.v) spectral += std::norm(b);
        spectral /= double(r) * c;
        CHECK(spectral == Catch::Approx(spatial).epsilon(1e-9));
    }
}
