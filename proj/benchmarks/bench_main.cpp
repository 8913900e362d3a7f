#include <benchmark/benchmark.h>

#include "ncsphere/clifford.hpp"
#include "ncsphere/diffforms.hpp"
#include "ncsphere/grassmann.hpp"
#include "ncsphere/homology.hpp"
#include "ncsphere/qgroup.hpp"
#include "ncsphere/rewrite.hpp"

namespace {

using namespace ncs;

const AngleTriple kU{{PiAngle(1, 3), PiAngle(1, 4), PiAngle(1, 5)}};

// (x0 + x1 + x2 + x3)^d reduced in A_u
void BM_NormalFormAu(benchmark::State& st) {
  const int d = static_cast<int>(st.range(0));
  const Presentation A = make_a_u(kU, d);
  NCPoly s(A.gens());
  for (int m = 0; m < 4; ++m) s = s + A.gen(m);
  NCPoly p = A.one();
  for (int k = 0; k < d; ++k) p = p * s;
  for (auto _ : st) benchmark::DoNotOptimize(A.normal_form(p));
  st.counters["terms"] = static_cast<double>(A.normal_form(p).size());
}
BENCHMARK(BM_NormalFormAu)->DenseRange(2, 6, 2)->Unit(benchmark::kMillisecond);

void BM_NormalFormPlane(benchmark::State& st) {
  const Presentation P = make_r2n_theta(3, [] {
    AngleMatrix t = zero_angles(3);
    t[0][1] = PiAngle(1, 3), t[1][0] = PiAngle(-1, 3);
    t[1][2] = PiAngle(1, 4), t[2][1] = PiAngle(-1, 4);
    return t;
  }());
  NCPoly s(P.gens());
  for (std::size_t m = 0; m < P.gens()->size(); ++m) s = s + P.gen(static_cast<int>(m));
  NCPoly p = P.one();
  for (int k = 0; k < st.range(0); ++k) p = p * s;
  for (auto _ : st) benchmark::DoNotOptimize(P.normal_form(p));
}
BENCHMARK(BM_NormalFormPlane)->DenseRange(2, 4, 1)->Unit(benchmark::kMillisecond);

void BM_CompletionAu(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(make_a_u(kU, static_cast<int>(st.range(0))));
}
BENCHMARK(BM_CompletionAu)->DenseRange(3, 6, 1)->Unit(benchmark::kMillisecond);

void BM_Ch32(benchmark::State& st) {
  const Presentation A = make_a_u(kU, 4);
  const MatrixPoly U = unitary_U_u(kU, A.gens());
  for (auto _ : st) benchmark::DoNotOptimize(reduce_chain(ch_odd(U, 1, &A), &A));
}
BENCHMARK(BM_Ch32)->Unit(benchmark::kMillisecond);

void BM_DetTheta(benchmark::State& st) {
  AngleMatrix th = zero_angles(2);
  th[0][1] = PiAngle(1, 3), th[1][0] = PiAngle(-1, 3);
  const Bialgebra M = make_m_theta(2, th);
  const FormAlgebra F = make_forms(2, th);
  for (auto _ : st) benchmark::DoNotOptimize(det_theta(M, F));
}
BENCHMARK(BM_DetTheta)->Unit(benchmark::kMillisecond);

void BM_MuCommutator(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(mu_and_commutator());
}
BENCHMARK(BM_MuCommutator)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
