#pragma once

#include <stdexcept>
#include <string>

#include "json.hpp"
#include "qflag/extended.hpp"
#include "qflag/grassmann.hpp"
#include "qflag/paving.hpp"
#include "qflag/rep.hpp"

namespace qflag {

using json = nlohmann::json;

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Reads a file and parses it as JSON; syntax errors report line and column.
json read_json_file(const std::string& path);
json parse_json_text(const std::string& text, const std::string& origin);

// {"vertices":[...],"arrows":[{"id","from","to"}]}
Quiver quiver_from_json(const json& j);
json quiver_to_json(const Quiver& q);
QuiverPtr load_quiver(const std::string& path);

// {"dims":[...], "maps":{"<arrow id>":[[...],...]}, "modulus":p?}; entries are
// integers or rational strings such as "1/2".
QRep rep_from_json(const json& j, const QuiverPtr& q);
json rep_to_json(const QRep& m);
FRep frep_from_json(const json& j, const QuiverPtr& q);
json frep_to_json(const FRep& m);

// Modules over R keyed by extended vertex ids "<vertex>@<level>" and arrow ids.
json bound_module_to_json(const QRep& t, const ExtendedQuiver& eq);
QRep bound_module_from_json(const json& j, const ExtendedQuiver& eq);

json dimvec_to_json(const DimVec& v);
json cells_to_json(const CellMultiset& c);
CellMultiset cells_from_json(const json& j);
json record_to_json(const CountingRecord& r);
CountingRecord record_from_json(const json& j);

}  // namespace qflag
