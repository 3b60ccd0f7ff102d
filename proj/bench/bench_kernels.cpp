// Serial vs OpenMP kernels.  Prints one TSV row per kernel and size.

#include <chrono>
#include <cstdlib>
#include <iostream>
#include <random>
#include <string>
#include <vector>

#include <omp.h>

#include "ccount/conjoin.hpp"
#include "ccount/lexicon.hpp"

using namespace ccount;
using Clock = std::chrono::steady_clock;

namespace {

CatType random_type(std::mt19937_64& rng, const std::vector<std::string>& atoms, int depth) {
    if (depth == 0 || rng() % 3 == 0) return CatType::basic(atoms[rng() % atoms.size()]);
    CatType r = random_type(rng, atoms, depth - 1);
    CatType a = random_type(rng, atoms, depth - 1);
    return CatType::fraction(r, rng() % 2 ? Slash::Rightward : Slash::Leftward, a);
}

std::vector<Register> registers(std::mt19937_64& rng, const std::vector<std::string>& atoms, Side side,
                                std::size_t n) {
    std::vector<Register> out;
    while (out.size() < n) {
        TypeSequence s;
        for (int i = 0; i < 5; ++i) s.push_back(random_type(rng, atoms, 2));
        auto sat = saturate(s, side);
        if (sat.verdict.ok) out.push_back(sat.reg);
    }
    return out;
}

template <class F>
double best_ms(int reps, F&& f) {
    double best = 1e300;
    for (int i = 0; i < reps; ++i) {
        auto t0 = Clock::now();
        f();
        best = std::min(best, std::chrono::duration<double, std::milli>(Clock::now() - t0).count());
    }
    return best;
}

void row(const std::string& kernel, std::size_t size, double serial, double parallel, bool same) {
    std::cout << kernel << '\t' << size << '\t' << omp_get_max_threads() << '\t' << serial << '\t' << parallel << '\t'
              << (parallel > 0 ? serial / parallel : 0) << '\t' << (same ? "yes" : "NO") << '\n';
}

}  // namespace

int main(int argc, char** argv) {
    const int reps = argc > 1 ? std::atoi(argv[1]) : 3;
    std::mt19937_64 rng(1);
    const std::vector<std::string> atoms{"a", "b", "c", "d", "s"};
    const BasicType goal("s");

    std::cout << "kernel\tsize\tthreads\tserial_ms\tparallel_ms\tspeedup\tsame\n";

    for (std::size_t side_n : {100, 316, 1000}) {
        auto ll = registers(rng, atoms, Side::LeftConjunct, side_n);
        auto rr = registers(rng, atoms, Side::RightConjunct, side_n);
        FilterResult ser, par;
        double s = best_ms(reps, [&] { ser = filter_product_serial(ll, rr, goal); });
        double p = best_ms(reps, [&] { par = filter_product(ll, rr, goal); });
        row("filter_product", side_n * side_n, s, p, ser.pairs == par.pairs);
    }

    for (std::size_t words : {6, 8, 10}) {
        Lexicon lex;
        std::vector<std::string> ws;
        for (std::size_t w = 0; w < words; ++w) {
            ws.push_back("w" + std::to_string(w));
            for (int k = 0; k < 4; ++k) lex.add(ws.back(), random_type(rng, atoms, 2));
        }
        SideEnumeration ser, par;
        double s = best_ms(reps, [&] { ser = enumerate_side(ws, lex, Side::LeftConjunct); });
        double p = best_ms(reps, [&] { par = enumerate_side_parallel(ws, lex, Side::LeftConjunct); });
        bool same = ser.survivors.size() == par.survivors.size();
        for (std::size_t i = 0; same && i < ser.survivors.size(); ++i) {
            same = ser.survivors[i].assignment.types == par.survivors[i].assignment.types;
        }
        row("enumerate_side", static_cast<std::size_t>(ser.inspected), s, p, same);
    }
    return 0;
}
