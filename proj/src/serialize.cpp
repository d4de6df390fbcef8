#include "fluctab/serialize.hpp"

#include <sstream>

#include <json.hpp>

namespace fluctab {

using nlohmann::json;

std::string word_to_text(const Word& w) {
  std::ostringstream os;
  for (size_t k = 0; k < w.size(); ++k) {
    if (k) os << ' ';
    const Letter& l = w[k];
    if (l.size() == 1) {
      os << l.elems()[0];
    } else {
      os << '{';
      for (int j = 0; j < l.size(); ++j) {
        if (j) os << ',';
        os << l.elems()[j];
      }
      os << '}';
    }
  }
  return os.str();
}

Word word_from_text(const std::string& text) {
  Word out;
  std::istringstream is(text);
  std::string token;
  while (is >> token) {
    try {
      if (token.front() == '{') {
        check(token.back() == '}', Errc::bad_input, "unbalanced brace");
        std::vector<int> elems;
        std::string inner = token.substr(1, token.size() - 2);
        std::istringstream ls(inner);
        std::string piece;
        while (std::getline(ls, piece, ','))
          if (!piece.empty()) elems.push_back(std::stoi(piece));
        out.push_back(Letter::make(std::move(elems)));
      } else {
        out.push_back(Letter::make({std::stoi(token)}));
      }
    } catch (const Error&) {
      throw;
    } catch (const std::exception&) {
      fail(Errc::bad_input, "malformed letter token: " + token);
    }
  }
  return out;
}

std::string tableau_to_json(const Tableau& t) {
  json j;
  j["r"] = t.rows();
  j["initial_shape"] = t.initial_shape();
  json word = json::array();
  for (const Letter& l : t.word()) word.push_back(l.elems());
  j["word"] = std::move(word);
  return j.dump();
}

Tableau tableau_from_json(const std::string& text) {
  try {
    json j = json::parse(text);
    int rows = j.at("r").get<int>();
    Part initial = j.value("initial_shape", Part{});
    Word word;
    for (const auto& letter : j.at("word"))
      word.push_back(Letter::make(letter.get<std::vector<int>>()));
    return Tableau::build(rows, std::move(initial), std::move(word));
  } catch (const Error&) {
    throw;
  } catch (const std::exception& e) {
    fail(Errc::bad_input, std::string("bad tableau JSON: ") + e.what());
  }
}

std::string promotion_matrix_to_json(const PromotionMatrix& pm) {
  json j;
  j["t"] = pm.t;
  j["blocks"] = pm.block_sizes;
  json entries = json::array();
  for (const auto& row : pm.entries) {
    json jrow = json::array();
    for (const Interval& e : row) {
      if (e.empty())
        jrow.push_back(nullptr);
      else
        jrow.push_back(json::array({e.lo, e.hi}));
    }
    entries.push_back(std::move(jrow));
  }
  j["entries"] = std::move(entries);
  return j.dump();
}

PromotionMatrix promotion_matrix_from_json(const std::string& text, int rows) {
  try {
    json j = json::parse(text);
    PromotionMatrix pm;
    pm.rows = rows;
    pm.t = j.at("t").get<int>();
    pm.block_sizes = j.at("blocks").get<std::vector<int>>();
    for (const auto& jrow : j.at("entries")) {
      std::vector<Interval> row;
      for (const auto& e : jrow) {
        if (e.is_null())
          row.push_back(Interval::empty_interval());
        else
          row.push_back(Interval{e.at(0).get<int>(), e.at(1).get<int>()});
      }
      pm.entries.push_back(std::move(row));
    }
    return pm;
  } catch (const Error&) {
    throw;
  } catch (const std::exception& e) {
    fail(Errc::bad_input, std::string("bad matrix JSON: ") + e.what());
  }
}

namespace {

const char* kind_name(DiagramKind k) {
  switch (k) {
    case DiagramKind::promotion: return "p";
    case DiagramKind::evacuation: return "e";
    case DiagramKind::dual_evacuation: return "ed";
    case DiagramKind::promotion_evacuation: return "pe";
  }
  return "?";
}

}  // namespace

std::string diagram_to_json(const GrowthDiagram& d) {
  json j;
  j["kind"] = kind_name(d.kind);
  j["r"] = d.rows;
  j["type"] = d.type;
  json rows = json::array();
  json offsets = json::array();
  for (size_t u = 0; u < d.grid.size(); ++u) {
    offsets.push_back(d.offset(static_cast<int>(u)));
    json row = json::array();
    for (const Part& p : d.grid[u]) row.push_back(p);
    rows.push_back(std::move(row));
  }
  j["offsets"] = std::move(offsets);
  j["rows"] = std::move(rows);
  return j.dump();
}

std::string diagram_pretty(const GrowthDiagram& d) {
  // Column widths harmonized across the staircase.
  size_t max_cols = 0;
  for (size_t u = 0; u < d.grid.size(); ++u)
    max_cols = std::max(max_cols, d.grid[u].size() + d.offset(static_cast<int>(u)));
  std::vector<size_t> width(max_cols, 0);
  auto cell = [&](const Part& p) { return part_to_string(p); };
  for (size_t u = 0; u < d.grid.size(); ++u)
    for (size_t j = 0; j < d.grid[u].size(); ++j) {
      size_t col = j + d.offset(static_cast<int>(u));
      width[col] = std::max(width[col], cell(d.grid[u][j]).size());
    }
  std::ostringstream os;
  for (size_t u = 0; u < d.grid.size(); ++u) {
    int off = d.offset(static_cast<int>(u));
    for (int j = 0; j < off; ++j) os << std::string(width[j] + 2, ' ');
    for (size_t j = 0; j < d.grid[u].size(); ++j) {
      std::string s = cell(d.grid[u][j]);
      os << s << std::string(width[j + off] - s.size() + 2, ' ');
    }
    os << '\n';
  }
  return os.str();
}

std::string count_matrix_to_json(const CountMatrix& m) {
  json j = m;
  return j.dump();
}

}  // namespace fluctab
