// Library usage: first nonvanishing degree of H^*(G(F_p), k) for one system.
//   first_nonvanishing A 3 7
#include "chevcoh/cohomology.hpp"

#include <iostream>

int main(int argc, char** argv) {
  using namespace chevcoh;
  if (argc != 4) {
    std::cerr << "usage: " << argv[0] << " FAMILY RANK PRIME\n";
    return 2;
  }
  try {
    const RootSystemSpec spec{parse_family(argv[1]), std::stoi(argv[2])};
    const std::int64_t p = std::stoll(argv[3]);
    const WeylGroup weyl = enumerate(build_root_system(spec));
    PartitionTable table(weyl.root_system());
    CohomologyEngine engine(weyl, table, p);

    const auto rep = engine.first_nontrivial(3 * p);
    if (!rep.m) {
      std::cout << spec.name() << ", p = " << p << ": nothing nonzero up to degree " << rep.search_ceiling << '\n';
      return 0;
    }
    std::cout << spec.name() << ", p = " << p << ": first nonzero degree " << *rep.m << '\n';
    for (const auto& w : rep.witnesses)
      std::cout << "  lambda = " << w.lambda << " = " << p << " * " << w.mu << " + " << w.w->word_string()
                << ".0, contributes " << w.dimension << '\n';
    if (rep.exact_dimension) std::cout << "  dim = " << *rep.exact_dimension << '\n';
    else std::cout << "  dim <= " << rep.dimension_upper_bound << '\n';
    if (rep.published)
      std::cout << "  published: degree " << rep.published->degree << " (" << rep.published->source << ")\n";
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
}
