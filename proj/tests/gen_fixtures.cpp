// Writes the axiom fixture file from the brute-force oracle:
//   gen_fixtures > tests/fixtures/axioms.jsonl

#include <iostream>

#include <json.hpp>

#include "corpus.hpp"
#include "medlat/parser.hpp"
#include "oracle.hpp"

int main() {
  using json = nlohmann::ordered_json;
  for (const auto& spec : corpus::algebras()) {
    const std::size_t n = static_cast<std::size_t>(std::stoul(spec.substr(spec.find(':') + 1)));
    const auto alg = spec.rfind("chain", 0) == 0 ? oracle::chain(n) : oracle::bn(n);
    for (const auto& text : corpus::formulas()) {
      const auto f = medlat::parse(text);
      const auto v = oracle::check(f, alg);
      json cm = nullptr;
      if (!v.valid) {
        json assignment = json::object();
        for (const auto& [var, x] : v.countermodel) assignment[var] = alg.labels[x];
        cm = {{"assignment", assignment}, {"value", alg.labels[v.value]}};
      }
      std::cout << json{{"formula", medlat::render(f)}, {"algebra", spec}, {"valid", v.valid},
                        {"countermodel", cm}}
                       .dump()
                << "\n";
    }
  }
}
