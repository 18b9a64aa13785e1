#include "arrgr/corpus.hpp"

#include <random>

#include "arrgr/error.hpp"

namespace arrgr {

Arrangement point_in_line() { return Arrangement::build(1, {AffineForm{{1}, 0}}, {"1"}); }

Arrangement parallel_pair() {
  return Arrangement::build(1, {AffineForm{{1}, 0}, AffineForm{{1}, -1}}, {"1", "2"});
}

Arrangement generic_three_lines() {
  return Arrangement::build(2, {AffineForm{{1, 0}, 0}, AffineForm{{0, 1}, 0}, AffineForm{{1, 1}, -1}},
                            {"a", "b", "c"});
}

Arrangement random_arrangement(std::size_t dim, std::size_t n, std::uint32_t seed) {
  std::mt19937 rng(seed);
  // Not uniform_int_distribution: its output is implementation-defined.
  auto coef = [&rng] { return static_cast<long>(rng() % 5) - 2; };
  for (;;) {
    std::vector<AffineForm> forms;
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < n; ++i) {
      AffineForm f{RatVector(dim), coef()};
      for (auto& x : f.linear) x = coef();
      forms.push_back(std::move(f));
      labels.push_back("h" + std::to_string(i + 1));
    }
    try {
      return Arrangement::build(dim, std::move(forms), std::move(labels));
    } catch (const InputError&) {
    }
  }
}

std::vector<CorpusEntry> test_corpus() {
  return {
      {"point", point_in_line()},
      {"parallel-pair", parallel_pair()},
      {"braid2", Arrangement::braid(2)},
      {"braid3", Arrangement::braid(3)},
      {"braid4", Arrangement::braid(4)},
      {"semiorder2", Arrangement::semiorder(2)},
      {"semiorder3", Arrangement::semiorder(3)},
      {"boolean2", Arrangement::boolean(2)},
      {"boolean3", Arrangement::boolean(3)},
      {"boolean4", Arrangement::boolean(4)},
      {"generic3", generic_three_lines()},
      {"random-3d-8", random_arrangement(3, 8, 20240611)},
  };
}

}  // namespace arrgr
