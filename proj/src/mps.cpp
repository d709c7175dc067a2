#include "antsched/mps.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

#include "antsched/error.hpp"

namespace antsched {

namespace {

std::string format_number(double value) {
  if (value == std::floor(value) && std::abs(value) < 1e15) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.0f", value);
    return buf;
  }
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", value);
  return buf;
}

std::string pad(const std::string& s, size_t width) {
  return s.size() >= width ? s + " " : s + std::string(width - s.size(), ' ');
}

}  // namespace

std::string export_mps(const MilpModel& model) {
  std::ostringstream out;
  out << "NAME          ANTSCHED\n";
  out << "OBJSENSE\n    MAX\n";

  out << "ROWS\n";
  out << " N  OBJ\n";
  for (const LinearConstraint& row : model.rows)
    out << (row.rel == Relation::eq ? " E  " : " L  ") << row.name << "\n";

  // row memberships per variable, in model row order
  std::vector<std::vector<std::pair<int, long>>> columns(model.vars.size());
  for (size_t r = 0; r < model.rows.size(); ++r)
    for (const auto& [var, coef] : model.rows[r].terms)
      columns[var].emplace_back(static_cast<int>(r), coef);

  out << "COLUMNS\n";
  for (int var = 0; var < model.vars.size(); ++var) {
    const std::string name = model.vars.name(var);
    bool any = false;
    if (model.objective[var] != 0.0) {
      out << "    " << pad(name, 12) << pad("OBJ", 12) << format_number(model.objective[var]) << "\n";
      any = true;
    }
    for (const auto& [row, coef] : columns[var]) {
      out << "    " << pad(name, 12) << pad(model.rows[row].name, 12)
          << format_number(static_cast<double>(coef)) << "\n";
      any = true;
    }
    if (!any) out << "    " << pad(name, 12) << pad("OBJ", 12) << "0\n";
  }

  out << "RHS\n";
  for (const LinearConstraint& row : model.rows)
    if (row.rhs != 0)
      out << "    " << pad("RHS", 12) << pad(row.name, 12) << format_number(static_cast<double>(row.rhs))
          << "\n";

  out << "BOUNDS\n";
  for (int var = 0; var < model.vars.size(); ++var)
    out << " BV " << pad("BND", 12) << model.vars.name(var) << "\n";

  out << "ENDATA\n";
  return out.str();
}

ParsedMps parse_mps(const std::string& text) {
  ParsedMps mps;
  std::istringstream in(text);
  std::string line, section;
  auto tokens_of = [](const std::string& s) {
    std::istringstream ls(s);
    std::vector<std::string> tokens;
    for (std::string tok; ls >> tok;) tokens.push_back(tok);
    return tokens;
  };

  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '*') continue;
    const bool indented = line[0] == ' ' || line[0] == '\t';
    std::vector<std::string> tok = tokens_of(line);
    if (tok.empty()) continue;

    if (!indented) {
      section = tok[0];
      if (section == "NAME" && tok.size() > 1) mps.name = tok[1];
      if (section == "ENDATA") break;
      continue;
    }
    if (section == "OBJSENSE") {
      mps.maximize = tok[0] == "MAX" || tok[0] == "MAXIMIZE";
    } else if (section == "ROWS") {
      if (tok.size() != 2) fail(ErrorKind::parse, "malformed ROWS line: " + line);
      if (tok[0] == "N") {
        if (!mps.objective_row.empty()) fail(ErrorKind::parse, "multiple objective rows");
        mps.objective_row = tok[1];
      } else if (tok[0] == "L" || tok[0] == "G" || tok[0] == "E") {
        mps.rows.push_back({tok[1], tok[0][0], 0.0});
      } else {
        fail(ErrorKind::parse, "unknown row sense in: " + line);
      }
    } else if (section == "COLUMNS") {
      if (tok.size() < 3 || tok.size() % 2 == 0)
        fail(ErrorKind::parse, "malformed COLUMNS line: " + line);
      if (!mps.entries.contains(tok[0])) mps.columns.push_back(tok[0]);
      auto& col = mps.entries[tok[0]];
      for (size_t i = 1; i + 1 < tok.size(); i += 2) col[tok[i]] += std::stod(tok[i + 1]);
    } else if (section == "RHS") {
      if (tok.size() < 3 || tok.size() % 2 == 0) fail(ErrorKind::parse, "malformed RHS line: " + line);
      for (size_t i = 1; i + 1 < tok.size(); i += 2) {
        bool found = false;
        for (ParsedMps::Row& row : mps.rows)
          if (row.name == tok[i]) {
            row.rhs = std::stod(tok[i + 1]);
            found = true;
            break;
          }
        if (!found) fail(ErrorKind::parse, "RHS for unknown row " + tok[i]);
      }
    } else if (section == "BOUNDS") {
      if (tok.size() < 3) fail(ErrorKind::parse, "malformed BOUNDS line: " + line);
      if (tok[0] == "BV") mps.binaries.push_back(tok[2]);
      else fail(ErrorKind::parse, "unsupported bound type " + tok[0]);
    } else if (section == "RANGES") {
      fail(ErrorKind::parse, "RANGES section is not supported");
    }
  }
  if (mps.objective_row.empty()) fail(ErrorKind::parse, "MPS file has no objective row");
  return mps;
}

SolutionFile parse_solution_text(const std::string& text) {
  SolutionFile sol;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    size_t begin = line.find_first_not_of(" \t\r");
    if (begin == std::string::npos) continue;
    size_t last = line.find_last_not_of(" \t\r");
    std::string body = line.substr(begin, last - begin + 1);
    if (body[0] == '#' || body[0] == '*') continue;

    std::istringstream ls(body);
    std::string key, value;
    if (!(ls >> key >> value) || (ls >> std::ws, !ls.eof()))
      fail(ErrorKind::parse, "solution line " + std::to_string(lineno) + " is not `name value`: " + body);
    try {
      if (key == "=status=") sol.status = value;
      else if (key == "=obj=") {
        sol.objective = std::stod(value);
        sol.has_objective = true;
      } else if (!sol.values.emplace(key, std::stod(value)).second) {
        fail(ErrorKind::parse, "duplicate solution entry for " + key);
      }
    } catch (const std::invalid_argument&) {
      fail(ErrorKind::parse, "bad number on solution line " + std::to_string(lineno) + ": " + body);
    }
  }
  return sol;
}

}  // namespace antsched
