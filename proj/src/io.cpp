#include "baerlab/io.hpp"

#include <cctype>
#include <fstream>
#include <limits>
#include <sstream>

#include "baerlab/todd_coxeter.hpp"

namespace baerlab::io {

namespace {

[[noreturn]] void parse_fail(const std::string& path, int line, const std::string& msg) {
  std::ostringstream os;
  os << path << ":" << line << ": " << msg;
  throw BaerError(Errc::ParseError, os.str());
}

std::string trim(const std::string& s) {
  std::size_t a = s.find_first_not_of(" \t\r\n");
  if (a == std::string::npos) return "";
  std::size_t b = s.find_last_not_of(" \t\r\n");
  return s.substr(a, b - a + 1);
}

std::vector<std::string> read_lines(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw BaerError(Errc::ParseError, "cannot open file: " + path);
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) {
    std::size_t hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    lines.push_back(line);
  }
  return lines;
}

void require_format_header(const std::vector<std::string>& lines,
                           const std::string& path) {
  for (std::size_t i = 0; i < lines.size(); ++i) {
    std::string t = trim(lines[i]);
    if (t.empty()) continue;
    if (t != "format: 1")
      parse_fail(path, static_cast<int>(i + 1), "expected 'format: 1' header");
    return;
  }
  parse_fail(path, 1, "empty file");
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(trim(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(trim(cur));
  return out;
}

// nested integer list "[[1,2],[3,4]]" (rows) -> IntMatrix; "[]" is 0 rows
ab::IntMatrix parse_matrix_literal(const std::string& text, const std::string& path,
                                   int lineno, int expect_rows = -1) {
  std::vector<std::vector<Int>> rows;
  std::size_t i = 0;
  auto skip = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  skip();
  if (i >= text.size() || text[i] != '[') parse_fail(path, lineno, "expected '['");
  ++i;
  skip();
  while (i < text.size() && text[i] != ']') {
    if (text[i] == '[') {
      ++i;
      std::vector<Int> row;
      skip();
      while (i < text.size() && text[i] != ']') {
        std::size_t j = i;
        while (j < text.size() && text[j] != ',' && text[j] != ']') ++j;
        std::string tok = trim(text.substr(i, j - i));
        if (tok.empty()) parse_fail(path, lineno, "empty matrix entry");
        row.emplace_back(tok);
        i = j;
        if (i < text.size() && text[i] == ',') ++i;
        skip();
      }
      if (i >= text.size()) parse_fail(path, lineno, "unterminated matrix row");
      ++i;  // ']'
      rows.push_back(std::move(row));
      skip();
      if (i < text.size() && text[i] == ',') ++i;
      skip();
    } else {
      parse_fail(path, lineno, "expected '[' starting a row");
    }
  }
  if (i >= text.size()) parse_fail(path, lineno, "unterminated matrix literal");
  for (std::size_t r = 1; r < rows.size(); ++r)
    if (rows[r].size() != rows[0].size()) parse_fail(path, lineno, "ragged matrix");
  if (rows.empty() && expect_rows > 0) {
    return ab::IntMatrix::zeros(expect_rows, 0);
  }
  return ab::IntMatrix::from_int_rows(rows);
}

}  // namespace

GroupFile parse_group_file(const std::string& path, int max_order, int max_cosets) {
  std::vector<std::string> lines = read_lines(path);
  require_format_header(lines, path);

  enum class Mode { None, Presentation, Table };
  Mode mode = Mode::None;
  std::vector<std::string> gens;
  std::vector<std::string> relator_lines;
  std::vector<std::string> elem_names;
  std::vector<std::vector<std::string>> table_rows;
  std::vector<std::pair<std::string, std::string>> sub_lines;  // name -> gens text
  int mode_line = 0;

  for (std::size_t i = 0; i < lines.size(); ++i) {
    std::string t = trim(lines[i]);
    int ln = static_cast<int>(i + 1);
    if (t.empty() || t == "format: 1") continue;
    if (t == "presentation:") {
      mode = Mode::Presentation;
      mode_line = ln;
      continue;
    }
    if (t == "table:") {
      mode = Mode::Table;
      mode_line = ln;
      continue;
    }
    if (t.rfind("generators:", 0) == 0) {
      if (mode != Mode::Presentation)
        parse_fail(path, ln, "generators line outside a presentation block");
      std::istringstream is(t.substr(11));
      std::string name;
      while (is >> name) gens.push_back(name);
      continue;
    }
    if (t.rfind("elements:", 0) == 0) {
      if (mode != Mode::Table)
        parse_fail(path, ln, "elements line outside a table block");
      std::istringstream is(t.substr(9));
      std::string name;
      while (is >> name) elem_names.push_back(name);
      continue;
    }
    if (t.rfind("row:", 0) == 0) {
      if (mode != Mode::Table) parse_fail(path, ln, "row line outside a table block");
      std::istringstream is(t.substr(4));
      std::vector<std::string> row;
      std::string name;
      while (is >> name) row.push_back(name);
      table_rows.push_back(std::move(row));
      continue;
    }
    if (t.rfind("sub:", 0) == 0 || t.rfind("M =", 0) == 0 || t.rfind("N =", 0) == 0 ||
        t.rfind("M=", 0) == 0 || t.rfind("N=", 0) == 0) {
      std::string body = t;
      std::string name;
      if (t.rfind("sub:", 0) == 0) body = trim(t.substr(4));
      std::size_t eq = body.find('=');
      if (eq == std::string::npos) parse_fail(path, ln, "expected '=' in subgroup line");
      name = trim(body.substr(0, eq));
      sub_lines.emplace_back(name, trim(body.substr(eq + 1)));
      continue;
    }
    if (mode == Mode::Presentation) {
      relator_lines.push_back(t);
      continue;
    }
    parse_fail(path, ln, "unrecognized line: '" + t + "'");
  }

  GroupFile out;
  std::vector<int> gen_elems;  // presentation generators as element indices
  if (mode == Mode::Presentation) {
    if (gens.empty()) parse_fail(path, mode_line, "presentation without generators");
    std::vector<grp::Word> rels;
    for (const auto& r : relator_lines) rels.push_back(grp::parse_word(r, gens));
    grp::TcGroup tc = grp::todd_coxeter_group_full(grp::Presentation(gens, rels),
                                                   max_cosets, max_order);
    out.group = tc.group;
    gen_elems = tc.gen_elems;
  } else if (mode == Mode::Table) {
    if (elem_names.empty()) parse_fail(path, mode_line, "table without elements line");
    std::map<std::string, int> index;
    for (std::size_t i = 0; i < elem_names.size(); ++i)
      index[elem_names[i]] = static_cast<int>(i);
    if (table_rows.size() != elem_names.size())
      parse_fail(path, mode_line, "table row count does not match element count");
    std::vector<std::vector<int>> table;
    for (const auto& row : table_rows) {
      if (row.size() != elem_names.size())
        parse_fail(path, mode_line, "table row has wrong length");
      std::vector<int> r;
      for (const auto& nm : row) {
        auto it = index.find(nm);
        if (it == index.end()) parse_fail(path, mode_line, "unknown element: " + nm);
        r.push_back(it->second);
      }
      table.push_back(std::move(r));
    }
    out.group = grp::make_group(elem_names, std::move(table), max_order);
  } else {
    parse_fail(path, 1, "group file needs a presentation: or table: block");
  }

  auto element_of_token = [&](const std::string& tok, int ln) -> int {
    if (mode == Mode::Table) {
      for (int i = 0; i < out.group->order(); ++i)
        if (out.group->name(i) == tok) return i;
      parse_fail(path, ln, "unknown element name: " + tok);
    }
    grp::Word w = grp::parse_word(tok, gens);
    int acc = out.group->identity();
    for (const auto& [g, e] : w.syl)
      acc = out.group->mul(acc, out.group->pow(gen_elems[g], e));
    return acc;
  };

  for (const auto& [name, body] : sub_lines) {
    std::vector<int> elems;
    if (!body.empty())
      for (const auto& tok : split(body, ','))
        if (!tok.empty()) elems.push_back(element_of_token(tok, 0));
    grp::Subgroup s = grp::Subgroup::closure(out.group, elems);
    if (name == "M")
      out.m = s;
    else if (name == "N")
      out.n = s;
    else
      out.subs.emplace(name, s);
  }
  return out;
}

namespace {

ab::IntMatrix matrix_from_json(const Json& j, const std::string& path) {
  if (!j.contains("rows") || !j.contains("cols") || !j.contains("entries"))
    throw BaerError(Errc::ParseError, path + ": matrix needs rows/cols/entries");
  int rows = j["rows"].get<int>();
  int cols = j["cols"].get<int>();
  ab::IntMatrix m = ab::IntMatrix::zeros(rows, cols);
  const Json& e = j["entries"];
  if (static_cast<int>(e.size()) != rows)
    throw BaerError(Errc::ParseError, path + ": entry row count mismatch");
  for (int i = 0; i < rows; ++i) {
    if (static_cast<int>(e[i].size()) != cols)
      throw BaerError(Errc::ParseError, path + ": entry col count mismatch");
    for (int c = 0; c < cols; ++c) {
      if (e[i][c].is_string())
        m.set(i, c, Int(e[i][c].get<std::string>()));
      else
        m.set(i, c, Int(e[i][c].get<long long>()));
    }
  }
  return m;
}

Json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw BaerError(Errc::ParseError, "cannot open file: " + path);
  Json j;
  try {
    in >> j;
  } catch (const std::exception& e) {
    throw BaerError(Errc::ParseError, path + ": " + e.what());
  }
  if (!j.contains("format") || j["format"].get<int>() != 1)
    throw BaerError(Errc::ParseError, path + ": expected \"format\": 1");
  return j;
}

}  // namespace

simp::TruncSimplicialAb parse_simplicial_json(const std::string& path) {
  Json j = load_json(path);
  if (!j.contains("type") || j["type"] != "simplicial-ab")
    throw BaerError(Errc::ParseError, path + ": expected type simplicial-ab");
  simp::TruncSimplicialAb x;
  x.T = j["trunc"].get<int>();
  for (const auto& lvl : j["levels"])
    x.levels.push_back(ab::FgAbGroup(matrix_from_json(lvl, path)));
  if (static_cast<int>(x.levels.size()) != x.T + 1)
    throw BaerError(Errc::ParseError, path + ": level count must be trunc+1");
  x.faces.resize(x.T + 1);
  const Json& fs = j["faces"];
  if (static_cast<int>(fs.size()) != x.T)
    throw BaerError(Errc::ParseError, path + ": faces must list levels 1..T");
  for (int n = 1; n <= x.T; ++n) {
    const Json& row = fs[n - 1];
    if (static_cast<int>(row.size()) != n + 1)
      throw BaerError(Errc::ParseError, path + ": level n needs n+1 faces");
    for (int i = 0; i <= n; ++i)
      x.faces[n].emplace_back(x.levels[n], x.levels[n - 1],
                              matrix_from_json(row[i], path));
  }
  x.degens.resize(std::max(x.T, 0));
  const Json& ss = j["degeneracies"];
  if (static_cast<int>(ss.size()) != x.T)
    throw BaerError(Errc::ParseError, path + ": degeneracies must list levels 0..T-1");
  for (int n = 0; n < x.T; ++n) {
    const Json& row = ss[n];
    if (static_cast<int>(row.size()) != n + 1)
      throw BaerError(Errc::ParseError, path + ": level n needs n+1 degeneracies");
    for (int i = 0; i <= n; ++i)
      x.degens[n].emplace_back(x.levels[n], x.levels[n + 1],
                               matrix_from_json(row[i], path));
  }
  return x;
}

seq::ExactSeqInstance parse_sequence_json(const std::string& path) {
  Json j = load_json(path);
  if (!j.contains("type") || j["type"] != "exact-seq")
    throw BaerError(Errc::ParseError, path + ": expected type exact-seq");
  std::vector<seq::Term> terms;
  for (const auto& t : j["terms"]) {
    std::string kind = t["kind"].get<std::string>();
    std::string label = t.value("label", std::string());
    if (kind == "group") {
      terms.push_back(seq::Term::of(ab::FgAbGroup(matrix_from_json(t["presentation"], path)),
                                    label));
    } else if (kind == "unknown") {
      terms.push_back(seq::Term::unknown(label.empty() ? "?" : label));
    } else {
      throw BaerError(Errc::ParseError, path + ": term kind must be group|unknown");
    }
  }
  std::vector<seq::MapSlot> maps;
  int idx = 0;
  for (const auto& m : j["maps"]) {
    std::string kind = m["kind"].get<std::string>();
    if (kind == "hom") {
      if (idx + 1 >= static_cast<int>(terms.size()) || !terms[idx].known() ||
          !terms[idx + 1].known())
        throw BaerError(Errc::ParseError, path + ": hom next to unknown term");
      maps.push_back(seq::MapSlot::of(ab::AbHom(*terms[idx].group,
                                                *terms[idx + 1].group,
                                                matrix_from_json(m["matrix"], path))));
    } else if (kind == "symbolic") {
      maps.push_back(seq::MapSlot::symbolic(m.value("label", std::string())));
    } else {
      throw BaerError(Errc::ParseError, path + ": map kind must be hom|symbolic");
    }
    ++idx;
  }
  return seq::ExactSeqInstance(std::move(terms), std::move(maps));
}

SystemFile parse_system_file(const std::string& path, int max_order, int max_cosets) {
  std::vector<std::string> lines = read_lines(path);
  require_format_header(lines, path);
  std::string kind;
  struct ObjLine {
    int idx;
    std::string body;
    int line;
  };
  std::vector<ObjLine> objs;
  struct MapLine {
    int from, to;
    std::string body;
    int line;
  };
  std::vector<MapLine> mapls;
  for (std::size_t i = 0; i < lines.size(); ++i) {
    std::string t = trim(lines[i]);
    int ln = static_cast<int>(i + 1);
    if (t.empty() || t == "format: 1") continue;
    if (t.rfind("kind:", 0) == 0) {
      kind = trim(t.substr(5));
      continue;
    }
    if (t.rfind("object", 0) == 0) {
      std::istringstream is(t.substr(6));
      int idx;
      char colon;
      if (!(is >> idx >> colon) || colon != ':')
        parse_fail(path, ln, "expected 'object <i>: ...'");
      std::string rest;
      std::getline(is, rest);
      objs.push_back({idx, trim(rest), ln});
      continue;
    }
    if (t.rfind("map", 0) == 0) {
      std::istringstream is(t.substr(3));
      int from, to;
      std::string arrow;
      if (!(is >> from >> arrow >> to) || arrow != "->")
        parse_fail(path, ln, "expected 'map <i> -> <j> : ...'");
      std::string rest;
      std::getline(is, rest);
      rest = trim(rest);
      if (rest.empty() || rest[0] != ':') parse_fail(path, ln, "expected ':' in map line");
      mapls.push_back({from, to, trim(rest.substr(1)), ln});
      continue;
    }
    parse_fail(path, ln, "unrecognized line: '" + t + "'");
  }

  SystemFile out;
  if (kind == "abelian-system") {
    std::vector<ab::FgAbGroup> objects(objs.size(), ab::FgAbGroup::trivial());
    std::vector<bool> seen(objs.size(), false);
    for (const auto& o : objs) {
      if (o.idx < 0 || o.idx >= static_cast<int>(objs.size()) || seen[o.idx])
        parse_fail(path, o.line, "object indices must be 0..n-1, each once");
      seen[o.idx] = true;
      // body: gens <g> rels [[...]]
      std::istringstream is(o.body);
      std::string kw;
      int gcount;
      if (!(is >> kw >> gcount) || kw != "gens")
        parse_fail(path, o.line, "expected 'gens <count> rels [[...]]'");
      std::string kw2;
      is >> kw2;
      std::string rest;
      std::getline(is, rest);
      if (kw2 != "rels") parse_fail(path, o.line, "expected 'rels'");
      ab::IntMatrix rel = parse_matrix_literal(trim(rest), path, o.line, gcount);
      if (rel.rows() != gcount) {
        if (rel.rows() == 0 && rel.cols() == 0)
          rel = ab::IntMatrix::zeros(gcount, 0);
        else
          parse_fail(path, o.line, "relation matrix rows must equal gens");
      }
      objects[o.idx] = ab::FgAbGroup(rel);
    }
    std::map<std::pair<int, int>, ab::AbHom> edges;
    for (const auto& m : mapls) {
      if (m.from < 0 || m.from >= static_cast<int>(objects.size()) || m.to < 0 ||
          m.to >= static_cast<int>(objects.size()))
        parse_fail(path, m.line, "map index out of range");
      ab::IntMatrix mat = parse_matrix_literal(m.body, path, m.line,
                                               objects[m.to].gens());
      if (mat.rows() == 0 && mat.cols() == 0 && objects[m.to].gens() > 0)
        mat = ab::IntMatrix::zeros(objects[m.to].gens(), objects[m.from].gens());
      edges.emplace(std::make_pair(m.from, m.to),
                    ab::AbHom(objects[m.from], objects[m.to], mat));
    }
    out.abelian = ab::DirectedSystemAb(std::move(objects), std::move(edges));
  } else if (kind == "triple-system") {
    std::vector<std::optional<grp::TripleInstance>> objects(objs.size());
    for (const auto& o : objs) {
      if (o.idx < 0 || o.idx >= static_cast<int>(objs.size()) || objects[o.idx])
        parse_fail(path, o.line, "object indices must be 0..n-1, each once");
      // body is a path to a triple file, relative to the system file
      std::string tpath = o.body;
      if (!tpath.empty() && tpath[0] != '/') {
        std::size_t slash = path.find_last_of('/');
        if (slash != std::string::npos) tpath = path.substr(0, slash + 1) + tpath;
      }
      GroupFile gf = parse_group_file(tpath, max_order, max_cosets);
      if (!gf.m || !gf.n) parse_fail(path, o.line, "system object is not a triple file");
      objects[o.idx] = grp::TripleInstance(gf.group, *gf.m, *gf.n);
    }
    std::map<std::pair<int, int>, grp::TripleMorphism> edges;
    for (const auto& m : mapls) {
      if (m.from < 0 || m.from >= static_cast<int>(objects.size()) || m.to < 0 ||
          m.to >= static_cast<int>(objects.size()))
        parse_fail(path, m.line, "map index out of range");
      const grp::TripleInstance& src = *objects[m.from];
      const grp::TripleInstance& dst = *objects[m.to];
      std::vector<int> emap;
      for (const auto& tok : split(m.body, ',')) {
        int found = -1;
        for (int i = 0; i < dst.g->order(); ++i)
          if (dst.g->name(i) == tok) found = i;
        if (found < 0) parse_fail(path, m.line, "unknown target element: " + tok);
        emap.push_back(found);
      }
      if (static_cast<int>(emap.size()) != src.g->order())
        parse_fail(path, m.line, "map must list one image per source element");
      edges.emplace(std::make_pair(m.from, m.to),
                    grp::triple_hom_apply(emap, src, dst));
    }
    std::vector<grp::TripleInstance> plain;
    for (auto& o : objects) plain.push_back(*o);
    out.triples = mult::make_triple_system(std::move(plain), std::move(edges));
  } else {
    parse_fail(path, 1, "kind must be abelian-system or triple-system");
  }
  return out;
}

mult::TorsionRequest parse_torsion_file(const std::string& path) {
  std::vector<std::string> lines = read_lines(path);
  require_format_header(lines, path);
  mult::TorsionRequest req;
  bool have_rule = false;
  for (std::size_t i = 0; i < lines.size(); ++i) {
    std::string t = trim(lines[i]);
    int ln = static_cast<int>(i + 1);
    if (t.empty() || t == "format: 1") continue;
    if (t.rfind("rule:", 0) == 0) {
      std::string r = trim(t.substr(5));
      if (r == "pair")
        req.rule = mult::TorsionRule::Pair;
      else if (r == "triple")
        req.rule = mult::TorsionRule::Triple;
      else
        parse_fail(path, ln, "rule must be pair or triple");
      have_rule = true;
      continue;
    }
    if (t.rfind("c:", 0) == 0) {
      req.c_target = std::stoll(trim(t.substr(2)));
      continue;
    }
    if (t.rfind("hypothesis:", 0) == 0) {
      std::istringstream is(t.substr(11));
      mult::TorsionHypothesis h;
      std::string tok;
      if (!(is >> h.name)) parse_fail(path, ln, "hypothesis needs a name");
      while (is >> tok) {
        if (tok.rfind("torsion=", 0) == 0) {
          std::string v = tok.substr(8);
          if (v != "true" && v != "false") parse_fail(path, ln, "torsion must be boolean");
          h.torsion = v == "true";
        } else if (tok.rfind("provenance=", 0) == 0) {
          h.provenance = tok.substr(11);
        } else {
          parse_fail(path, ln, "unknown hypothesis attribute: " + tok);
        }
      }
      if (h.provenance.empty()) h.provenance = "computed";
      req.hypotheses.push_back(std::move(h));
      continue;
    }
    parse_fail(path, ln, "unrecognized line: '" + t + "'");
  }
  if (!have_rule) parse_fail(path, 1, "torsion file needs a rule line");
  return req;
}

Json canon_json(const ab::FgAbGroup& g) {
  Json j;
  j["rank"] = g.rank();
  Json fs = Json::array();
  for (const auto& d : g.factors()) {
    if (d <= Int(std::numeric_limits<long long>::max()))
      fs.push_back(d.convert_to<long long>());
    else
      fs.push_back(d.str());
  }
  j["factors"] = std::move(fs);
  return j;
}

Json multiplier_json(const mult::MultiplierResult& r) {
  Json j;
  j["label"] = r.label;
  j["method"] = mult::method_tag(r.method);
  j["degree_shift"] = r.degree_shift;
  if (r.value) {
    j["value"] = canon_json(*r.value);
  } else {
    j["value"] = "unknown";
    if (r.lower_bound) j["lower_bound"] = canon_json(*r.lower_bound);
    if (!r.extension_candidates.empty()) {
      Json cands = Json::array();
      for (const auto& c : r.extension_candidates) cands.push_back(canon_json(c));
      j["extension_candidates"] = std::move(cands);
    }
  }
  if (!r.notes.empty()) j["notes"] = r.notes;
  return j;
}

Json sequence_json(const seq::ExactSeqInstance& s,
                   const std::vector<seq::SlotVerdict>& verdicts) {
  Json j;
  Json terms = Json::array();
  for (const auto& t : s.terms) {
    Json tj;
    tj["label"] = t.label;
    if (t.known())
      tj["value"] = canon_json(*t.group);
    else
      tj["value"] = "unknown";
    terms.push_back(std::move(tj));
  }
  j["terms"] = std::move(terms);
  Json vs = Json::array();
  for (const auto& v : verdicts) {
    Json vj;
    vj["slot"] = v.index;
    vj["status"] = v.status == seq::SlotStatus::Exact
                       ? "exact"
                       : (v.status == seq::SlotStatus::Inexact ? "inexact"
                                                               : "undetermined");
    if (!v.witness.empty()) vj["witness"] = v.witness;
    vs.push_back(std::move(vj));
  }
  j["slots"] = std::move(vs);
  return j;
}

Json les_report_json(const mult::LesReport& rep) {
  Json j;
  j["sequence"] = sequence_json(rep.paper_sequence, rep.paper_verdicts);
  if (rep.bar_sequence)
    j["bar_sequence"] = sequence_json(*rep.bar_sequence, rep.bar_verdicts);
  j["checks"] = rep.checks;
  if (!rep.notes.empty()) j["notes"] = rep.notes;
  j["exact_ok"] = rep.exact_ok;
  return j;
}

namespace {

bool is_canon(const Json& j) {
  return j.is_object() && j.size() == 2 && j.contains("rank") && j.contains("factors");
}

std::string canon_tsv(const Json& j) {
  std::ostringstream os;
  os << j["rank"].get<long long>() << ":";
  bool first = true;
  for (const auto& f : j["factors"]) {
    if (!first) os << ",";
    if (f.is_string())
      os << f.get<std::string>();
    else
      os << f.get<long long>();
    first = false;
  }
  return os.str();
}

void flatten(const Json& j, const std::string& prefix, std::ostringstream& os) {
  if (is_canon(j)) {
    os << prefix << "\t" << canon_tsv(j) << "\n";
    return;
  }
  if (j.is_object()) {
    for (const auto& [k, v] : j.items())
      flatten(v, prefix.empty() ? k : prefix + "." + k, os);
    return;
  }
  if (j.is_array()) {
    int i = 0;
    for (const auto& v : j) {
      flatten(v, prefix + "[" + std::to_string(i) + "]", os);
      ++i;
    }
    return;
  }
  os << prefix << "\t";
  if (j.is_string())
    os << j.get<std::string>();
  else
    os << j.dump();
  os << "\n";
}

}  // namespace

std::string to_tsv(const Json& j) {
  std::ostringstream os;
  flatten(j, "", os);
  return os.str();
}

}  // namespace baerlab::io
