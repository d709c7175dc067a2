#pragma once

#include <map>
#include <string>
#include <vector>

#include "antsched/milp_model.hpp"

namespace antsched {

// Writes the model as MPS text (NAME/OBJSENSE/ROWS/COLUMNS/RHS/BOUNDS/ENDATA,
// every variable bounded BV). Output is byte-identical for identical models.
std::string export_mps(const MilpModel& model);

// Structural image of an MPS file, used to guard the exporter via round-trip.
struct ParsedMps {
  std::string name;
  bool maximize = false;
  struct Row {
    std::string name;
    char sense = 'L';  // N, L, G, E
    double rhs = 0.0;
  };
  std::vector<Row> rows;                           // constraint rows, in file order
  std::string objective_row;
  std::vector<std::string> columns;                // variable names, in file order
  std::map<std::string, std::map<std::string, double>> entries;  // column -> row -> coef
  std::vector<std::string> binaries;
};

ParsedMps parse_mps(const std::string& text);

// Solution-file exchange format: optional `=status=` line, optional `=obj=`
// line, then one `name value` pair per line. Blank lines and lines starting
// with '#' or '*' are ignored.
struct SolutionFile {
  std::string status;  // empty means optimal
  bool has_objective = false;
  double objective = 0.0;
  std::map<std::string, double> values;
};

SolutionFile parse_solution_text(const std::string& text);

}  // namespace antsched
