#include "hartogs/arrangement.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <iostream>
#include <random>

namespace {

using namespace hartogs;

// Random canonical normals with small integer coordinates, duplicates removed.
RatMat random_hyperplanes(std::mt19937_64& rng, std::size_t rank, std::size_t count) {
    std::uniform_int_distribution<int> coord(-3, 3);
    RatMat rows;
    while (rows.size() < count) {
        RatVec v(rank);
        bool zero = true;
        for (auto& x : v) {
            const int c = coord(rng);
            x = c;
            zero = zero && c == 0;
        }
        if (zero) continue;
        rows.push_back(canonical_normal(v));
        sort_unique(rows);
    }
    return rows;
}

double run(const Cone& space, const RatMat& hyperplanes, bool parallel, std::size_t reps,
           std::size_t& faces_out) {
    using clock = std::chrono::steady_clock;
    const auto start = clock::now();
    std::size_t faces = 0;
    for (std::size_t i = 0; i < reps; ++i) {
        faces = enumerate_faces(space, hyperplanes, parallel).faces.size();
    }
    faces_out = faces;
    return std::chrono::duration<double, std::milli>(clock::now() - start).count() /
           static_cast<double>(reps);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"benchmark: serial vs OpenMP arrangement face enumeration"};
    std::size_t rank = 3;
    std::size_t count = 8;
    std::size_t reps = 3;
    std::uint64_t seed = 7;
    app.add_option("--rank", rank, "ambient rank (default 3)");
    app.add_option("--hyperplanes", count, "number of random hyperplanes (default 8)");
    app.add_option("--reps", reps, "repetitions per measurement (default 3)");
    app.add_option("--seed", seed, "RNG seed");
    CLI11_PARSE(app, argc, argv);

    std::mt19937_64 rng(seed);
    const Cone space = Cone::from_inequalities(rank, {});
    const RatMat hyperplanes = random_hyperplanes(rng, rank, count);

    std::size_t faces_serial = 0;
    std::size_t faces_parallel = 0;
    const double serial_ms = run(space, hyperplanes, false, reps, faces_serial);
    const double parallel_ms = run(space, hyperplanes, true, reps, faces_parallel);

    const Arrangement a = enumerate_faces(space, hyperplanes, false);
    const Arrangement b = enumerate_faces(space, hyperplanes, true);
    bool equal = a.faces.size() == b.faces.size();
    for (std::size_t i = 0; equal && i < a.faces.size(); ++i) {
        equal = a.faces[i].signs == b.faces[i].signs &&
                a.faces[i].closure == b.faces[i].closure;
    }

    std::cout << "rank " << rank << ", " << hyperplanes.size() << " hyperplanes, "
              << faces_serial << " faces\n";
    std::cout << "serial:   " << serial_ms << " ms\n";
    std::cout << "parallel: " << parallel_ms << " ms\n";
    std::cout << "speedup:  " << (parallel_ms > 0 ? serial_ms / parallel_ms : 0.0) << "x\n";
    std::cout << "outputs identical: " << (equal ? "yes" : "NO") << "\n";
    return equal ? 0 : 1;
}
