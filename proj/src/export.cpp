// Copyright 2026 The qfreeze Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qfreeze/export.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "qfreeze/errors.hpp"

namespace qfreeze {

using nlohmann::json;

namespace {

std::string format_value(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

std::ofstream open_for_write(const std::string& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open " + path + " for writing");
  return out;
}

void finish(std::ofstream& out, const std::string& path) {
  out.flush();
  if (!out) throw IoError("write to " + path + " failed");
}

void write_csv_row(std::ostream& out, const SweepRecord& r) {
  out << format_value(r.t) << ',' << format_value(r.c1) << ',' << format_value(r.c2) << ','
      << format_value(r.c3);
  for (const auto& v : r.values) out << ',' << format_value(v.value) << ',' << to_string(v.status);
  out << '\n';
}

void write_header(std::ostream& out, const std::vector<std::string>& cols) {
  for (std::size_t i = 0; i < cols.size(); ++i) out << (i ? "," : "") << cols[i];
  out << '\n';
}

}  // namespace

std::vector<std::string> header_columns(const SweepTable& table, bool replicate_rows) {
  std::vector<std::string> cols;
  if (replicate_rows) {
    cols.push_back("scale_index");
    cols.push_back("replicate");
  }
  for (const char* c : {"t", "c1", "c2", "c3"}) cols.push_back(c);
  for (const auto& m : table.measure_columns) {
    cols.push_back(m);
    cols.push_back(m + "_status");
  }
  return cols;
}

void write_csv(const std::string& path, const SweepTable& table) {
  std::ofstream out = open_for_write(path);
  write_header(out, header_columns(table, false));
  for (const auto& r : table.records) write_csv_row(out, r);
  finish(out, path);
}

void write_replicates_csv(const std::string& path, const SweepTable& table) {
  std::ofstream out = open_for_write(path);
  write_header(out, header_columns(table, true));
  for (const auto& rep : table.replicates) {
    out << rep.scale_index << ',' << rep.replicate << ',';
    write_csv_row(out, rep.record);
  }
  finish(out, path);
}

void write_jsonl(const std::string& path, const SweepTable& table) {
  std::ofstream out = open_for_write(path);
  for (const auto& r : table.records) {
    // ordered_json keeps the CSV column order on every line.
    nlohmann::ordered_json line;
    line["t"] = r.t;
    line["c1"] = r.c1;
    line["c2"] = r.c2;
    line["c3"] = r.c3;
    for (std::size_t k = 0; k < table.measure_columns.size(); ++k) {
      line[table.measure_columns[k]] = r.values[k].value;
      line[table.measure_columns[k] + "_status"] = to_string(r.values[k].status);
    }
    out << line.dump() << '\n';
  }
  finish(out, path);
}

SweepTable read_jsonl(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path);
  SweepTable table;
  std::string text;
  bool first = true;
  while (std::getline(in, text)) {
    if (text.empty()) continue;
    nlohmann::ordered_json line;
    try {
      line = nlohmann::ordered_json::parse(text);
    } catch (const nlohmann::ordered_json::parse_error& e) {
      throw IoError("malformed JSON line in " + path + ": " + e.what());
    }
    if (first) {
      for (const auto& [key, value] : line.items()) {
        if (key == "t" || key == "c1" || key == "c2" || key == "c3") continue;
        if (key.size() > 7 && key.compare(key.size() - 7, 7, "_status") == 0) continue;
        table.measure_columns.push_back(key);
      }
      first = false;
    }
    SweepRecord r;
    try {
      r.t = line.at("t").get<double>();
      r.c1 = line.at("c1").get<double>();
      r.c2 = line.at("c2").get<double>();
      r.c3 = line.at("c3").get<double>();
      for (const auto& col : table.measure_columns) {
        r.values.push_back({line.at(col).get<double>(),
                            optimizer_status_from_string(line.at(col + "_status").get<std::string>())});
      }
    } catch (const std::exception& e) {
      throw IoError("bad record in " + path + ": " + e.what());
    }
    table.records.push_back(std::move(r));
  }
  return table;
}

void write_metadata(const std::string& path, const Scenario& s, const SweepTable& table) {
  json meta;
  meta["artifact_version"] = kArtifactVersion;
  meta["scenario"] = scenario_to_json(s);
  meta["log_base"] = 2;
  meta["units"] = {{"t", "s"}, {"RE", "bits"}, {"Tr", "Tr|rho - delta| (twice the conventional trace distance)"},
                   {"F", "1 - F"}, {"L1", "dimensionless"}};
  meta["tolerances"] = {{"hermitian", kHermitianTol},
                        {"trace", kTraceTol},
                        {"psd", kPsdTol},
                        {"kraus_vs_analytic_triple", 1e-10},
                        {"negative_measure", 1e-9}};
  meta["seeds"] = {{"initial", s.initial.seed}, {"optimizer", s.optimizer.seed}};
  meta["columns"] = header_columns(table, false);
  meta["records"] = table.records.size();
  meta["replicate_records"] = table.replicates.size();
  meta["notes"] = s.notes;
  std::ofstream out = open_for_write(path);
  out << meta.dump(2) << '\n';
  finish(out, path);
}

void export_results(const Scenario& s, const SweepTable& table, const std::string& path) {
  if (table.records.empty()) throw IoError("nothing to export");
  if (s.format == ExportFormat::Csv) write_csv(path, table);
  else write_jsonl(path, table);
  write_metadata(path + ".meta.json", s, table);
  if (s.initial.keep_replicates && !table.replicates.empty()) {
    write_replicates_csv(path + ".replicates.csv", table);
  }
}

}  // namespace qfreeze
