#include "halgeo/algebra_io.hpp"

#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <vector>

#include "halgeo/error.hpp"

namespace halgeo {

namespace {

std::vector<std::string> words(const std::string& line) {
  std::istringstream in(line);
  std::vector<std::string> out;
  std::string w;
  while (in >> w) out.push_back(w);
  return out;
}

std::string strip_comment(const std::string& line) {
  auto hash = line.find('#');
  return hash == std::string::npos ? line : line.substr(0, hash);
}

[[noreturn]] void bad(std::size_t line_no, const std::string& what) {
  throw FormatError("line " + std::to_string(line_no) + ": " + what);
}

FiniteAlgebra parse_impl(std::string_view text, const VarietySpec* spec) {
  std::string name;
  std::vector<std::string> elements;
  std::vector<OpSymbol> ops;
  struct Row {
    std::vector<std::string> cells;
    std::size_t line;
  };
  std::map<std::string, std::vector<Row>> rows;
  std::optional<std::string> current_table;

  std::istringstream in{std::string(text)};
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    auto w = words(strip_comment(raw));
    if (w.empty()) continue;
    const auto& head = w.front();
    if (head == "algebra") {
      if (w.size() != 2) bad(line_no, "expected 'algebra <name>'");
      if (!name.empty()) bad(line_no, "second 'algebra' directive");
      name = w[1];
      current_table.reset();
    } else if (head == "elements") {
      if (!elements.empty()) bad(line_no, "second 'elements' directive");
      elements.assign(w.begin() + 1, w.end());
      if (elements.empty()) bad(line_no, "empty element list");
      current_table.reset();
    } else if (head == "op") {
      if (w.size() != 3) bad(line_no, "expected 'op <name> <arity>'");
      int arity = -1;
      try {
        std::size_t used = 0;
        arity = std::stoi(w[2], &used);
        if (used != w[2].size()) arity = -1;
      } catch (const std::exception&) {
        arity = -1;
      }
      if (arity < 0) bad(line_no, "invalid arity '" + w[2] + "'");
      ops.push_back({w[1], arity});
      current_table.reset();
    } else if (head == "table") {
      if (w.size() != 2) bad(line_no, "expected 'table <opname>'");
      if (rows.count(w[1])) bad(line_no, "second table for '" + w[1] + "'");
      rows[w[1]];
      current_table = w[1];
    } else if (current_table) {
      rows[*current_table].push_back({w, line_no});
    } else {
      bad(line_no, "unknown directive '" + head + "'");
    }
  }
  if (name.empty()) throw FormatError("missing 'algebra <name>' directive");
  if (elements.empty()) throw FormatError("missing 'elements' directive");

  SignaturePtr sig;
  try {
    sig = make_signature(ops);
  } catch (const SignatureError& e) {
    throw FormatError(e.what());
  }
  if (spec) {
    if (!same_signature(sig, spec->signature))
      throw SignatureError("algebra '" + name + "' declares " + sig->to_string() + ", variety expects " +
                           spec->signature->to_string());
    sig = spec->signature;
  }

  std::map<std::string, Element, std::less<>> index;
  for (std::size_t i = 0; i < elements.size(); ++i) {
    if (!index.emplace(elements[i], static_cast<Element>(i)).second)
      throw FormatError("duplicate element '" + elements[i] + "'");
  }
  const std::size_t n = elements.size();
  std::vector<std::vector<Element>> tables;
  for (const auto& op : sig->ops()) {
    auto it = rows.find(op.name);
    if (it == rows.end()) throw FormatError("missing table for '" + op.name + "'");
    std::size_t expected = 1;
    for (int i = 0; i < op.arity; ++i) expected *= n;
    std::vector<std::optional<Element>> cells(expected);
    for (const auto& row : it->second) {
      if (row.cells.size() != static_cast<std::size_t>(op.arity) + 1)
        bad(row.line, "row of '" + op.name + "' needs " + std::to_string(op.arity + 1) + " entries");
      std::size_t idx = 0;
      for (std::size_t j = 0; j < row.cells.size(); ++j) {
        auto e = index.find(row.cells[j]);
        if (e == index.end()) bad(row.line, "unknown element '" + row.cells[j] + "'");
        if (j + 1 < row.cells.size()) {
          idx = idx * n + e->second;
        } else {
          if (cells[idx] && *cells[idx] != e->second) bad(row.line, "conflicting row for '" + op.name + "'");
          if (cells[idx]) bad(row.line, "repeated row for '" + op.name + "'");
          cells[idx] = e->second;
        }
      }
    }
    std::vector<Element> table;
    for (const auto& c : cells) {
      if (!c)
        throw FormatError("table of '" + op.name + "' has " + std::to_string(it->second.size()) + " rows, needs " +
                          std::to_string(expected));
      table.push_back(*c);
    }
    tables.push_back(std::move(table));
    rows.erase(it);
  }
  if (!rows.empty()) throw FormatError("table for undeclared operation '" + rows.begin()->first + "'");

  FiniteAlgebra h(name, sig, elements, std::move(tables));
  if (spec) h.check_identities(*spec);
  return h;
}

}  // namespace

FiniteAlgebra parse_algebra(std::string_view text) { return parse_impl(text, nullptr); }

FiniteAlgebra parse_algebra(std::string_view text, const VarietySpec& spec) { return parse_impl(text, &spec); }

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open '" + path.string() + "'");
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

FiniteAlgebra load_algebra(const std::filesystem::path& path) {
  try {
    return parse_algebra(read_text_file(path));
  } catch (const FormatError& e) {
    throw FormatError(path.string() + ": " + e.what());
  }
}

VarietySpec load_variety(const std::filesystem::path& path) {
  try {
    return parse_variety(read_text_file(path));
  } catch (const FormatError& e) {
    throw FormatError(path.string() + ": " + e.what());
  }
}

VarietySpec parse_variety(std::string_view text) {
  std::vector<OpSymbol> ops;
  std::vector<std::string> vars;
  std::vector<std::pair<std::string, std::size_t>> pending;
  std::istringstream in{std::string(text)};
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    auto line = strip_comment(raw);
    auto w = words(line);
    if (w.empty()) continue;
    if (w[0] == "op") {
      if (w.size() != 3) bad(line_no, "expected 'op <name> <arity>'");
      int arity = -1;
      try {
        arity = std::stoi(w[2]);
      } catch (const std::exception&) {
      }
      if (arity < 0) bad(line_no, "invalid arity '" + w[2] + "'");
      ops.push_back({w[1], arity});
    } else if (w[0] == "vars") {
      vars.assign(w.begin() + 1, w.end());
    } else if (w[0] == "identity") {
      pending.emplace_back(line.substr(line.find("identity") + 8), line_no);
    } else {
      bad(line_no, "unknown directive '" + w[0] + "'");
    }
  }
  VarietySpec spec;
  spec.signature = make_signature(ops);
  if (!pending.empty()) {
    if (vars.empty()) throw FormatError("identities need a 'vars' directive");
    spec.identity_sort = make_sort("V", vars);
  }
  for (const auto& [body, line] : pending) {
    auto eq = body.find("==");
    if (eq == std::string::npos) bad(line, "identity needs '=='");
    spec.identities.emplace_back(parse_term(body.substr(0, eq), spec.identity_sort, spec.signature),
                                 parse_term(body.substr(eq + 2), spec.identity_sort, spec.signature));
  }
  return spec;
}

std::string write_algebra(const FiniteAlgebra& h) {
  std::ostringstream out;
  out << "algebra " << h.name() << "\nelements";
  for (const auto& e : h.elements()) out << ' ' << e;
  out << '\n';
  const auto& sig = *h.signature();
  for (const auto& op : sig.ops()) out << "op " << op.name << ' ' << op.arity << '\n';
  const auto n = h.size();
  for (std::size_t op = 0; op < sig.size(); ++op) {
    const int k = sig.op(static_cast<int>(op)).arity;
    out << "table " << sig.op(static_cast<int>(op)).name << '\n';
    const auto& table = h.table(static_cast<int>(op));
    for (std::size_t row = 0; row < table.size(); ++row) {
      std::vector<Element> args(static_cast<std::size_t>(k));
      auto r = row;
      for (int j = k - 1; j >= 0; --j) {
        args[static_cast<std::size_t>(j)] = static_cast<Element>(r % n);
        r /= n;
      }
      for (auto a : args) out << h.element_name(a) << ' ';
      out << h.element_name(table[row]) << '\n';
    }
  }
  return out.str();
}

}  // namespace halgeo
