// Parallel kernels against their serial references.
#include "lienorm/catalog.hpp"
#include "lienorm/lie_structure.hpp"

#include <omp.h>

#include <chrono>
#include <cstdlib>
#include <iostream>

using namespace lienorm;

namespace {

// gl(n) x C^n on C^n: dimension n^2 + n
std::vector<VectorField> gln_aff(std::size_t n) {
  Chart c = Chart::standard(n);
  std::vector<VectorField> fs;
  for (std::size_t i = 0; i < n; ++i) fs.push_back(VectorField::partial(c, i));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) fs.push_back(c.coordinate(j) * VectorField::partial(c, i));
  return fs;
}

template <class F>
double best_ms(int reps, F&& f) {
  double best = 1e300;
  for (int r = 0; r < reps; ++r) {
    auto t0 = std::chrono::steady_clock::now();
    f();
    best = std::min(best, std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count());
  }
  return best;
}

}  // namespace

int main(int argc, char** argv) {
  int reps = argc > 1 ? std::atoi(argv[1]) : 3;
  std::size_t max_n = argc > 2 ? std::strtoul(argv[2], nullptr, 10) : 5;
  std::cout << "threads " << omp_get_max_threads() << "\n";
  bool same = true;
  for (std::size_t n = 2; n <= max_n; ++n) {
    auto basis = gln_aff(n);
    StructureConstants par, ser;
    double tp = best_ms(reps, [&] { par = structure_constants(basis); });
    double ts = best_ms(reps, [&] { ser = structure_constants_serial(basis); });
    same = same && par == ser;
    std::cout << "structure_constants gl(" << n << ")+C^" << n << " dim " << basis.size() << "  serial " << ts
              << " ms  parallel " << tp << " ms  speedup " << ts / tp << "\n";
  }
  auto entries = load_catalog();
  RunOptions opt;
  std::vector<EntryOutcome> po, so;
  double tp = best_ms(reps, [&] { po = run_catalog(entries, opt); });
  double ts = best_ms(reps, [&] { so = run_catalog_serial(entries, opt); });
  for (std::size_t i = 0; i < po.size(); ++i) same = same && dump(po[i].analysis) == dump(so[i].analysis);
  std::cout << "catalog " << entries.size() << " entries  serial " << ts << " ms  parallel " << tp << " ms  speedup "
            << ts / tp << "\n";
  std::cout << (same ? "results identical" : "RESULTS DIFFER") << "\n";
  return same ? 0 : 1;
}
