#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "kcrank/crank_table.hpp"
#include "kcrank/qseries.hpp"

namespace kcrank {

class ResidueTable;

/// Output formats for the CLI. Big values always serialize as decimal
/// strings in JSON; CSV rows are `n,m,value`.
std::string render_table_text(const KCrankTable& t);
std::string render_table_csv(const KCrankTable& t);
std::string render_table_json(const KCrankTable& t);

/// Round-trip readers. CSV carries no k, so the caller supplies it; JSON is
/// self-describing. Both throw CacheFormatError on malformed input.
KCrankTable parse_table_csv(std::istream& in, int k);
KCrankTable parse_table_json(std::istream& in);

std::string render_residues_text(const ResidueTable& t);
std::string render_residues_csv(const ResidueTable& t);
std::string render_residues_json(const ResidueTable& t);

std::string render_series_text(const QSeries& s);
std::string render_series_csv(const QSeries& s);
std::string render_series_json(const QSeries& s);

std::string render_sequence_text(const std::vector<Integer>& v);
std::string render_sequence_csv(const std::vector<Integer>& v);
std::string render_sequence_json(const std::vector<Integer>& v);

}  // namespace kcrank
