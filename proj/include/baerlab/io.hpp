#ifndef BAERLAB_IO_HPP
#define BAERLAB_IO_HPP

#include <json.hpp>

#include <map>
#include <optional>
#include <string>
#include <variant>

#include "baerlab/ab_colimit.hpp"
#include "baerlab/multiplier.hpp"
#include "baerlab/simplicial.hpp"

namespace baerlab::io {

using Json = nlohmann::ordered_json;

// Group file (line oriented, `format: 1` header): either a `presentation:`
// block (generators line + one relator word per line) or a `table:` block
// (element names + one product row per element).  `sub: H = w1, w2` names a
// subgroup; `M = ...` / `N = ...` make the file a pair or triple file.
struct GroupFile {
  grp::GroupPtr group;
  std::map<std::string, grp::Subgroup> subs;
  std::optional<grp::Subgroup> m, n;
};
GroupFile parse_group_file(const std::string& path, int max_order, int max_cosets);

simp::TruncSimplicialAb parse_simplicial_json(const std::string& path);
seq::ExactSeqInstance parse_sequence_json(const std::string& path);

struct SystemFile {
  std::optional<ab::DirectedSystemAb> abelian;
  std::optional<mult::TripleSystem> triples;
};
SystemFile parse_system_file(const std::string& path, int max_order, int max_cosets);

mult::TorsionRequest parse_torsion_file(const std::string& path);

Json canon_json(const ab::FgAbGroup& g);
Json multiplier_json(const mult::MultiplierResult& r);
Json sequence_json(const seq::ExactSeqInstance& s,
                   const std::vector<seq::SlotVerdict>& verdicts);
Json les_report_json(const mult::LesReport& rep);

// Flattened key<TAB>value view of a report; canonical forms render as
// "rank:d1,d2,...".
std::string to_tsv(const Json& j);

}  // namespace baerlab::io

#endif
