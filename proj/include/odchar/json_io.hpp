#ifndef ODCHAR_JSON_IO_HPP
#define ODCHAR_JSON_IO_HPP

#include <json.hpp>

#include "odchar/census.hpp"
#include "odchar/coincidence.hpp"
#include "odchar/families.hpp"
#include "odchar/group_counts.hpp"

namespace odchar {

using ordered_json = nlohmann::ordered_json;

// Bigints render as JSON numbers when they fit 64 bits, decimal strings
// otherwise.
ordered_json bigint_to_json(const Bigint& v);

ordered_json to_json(const CoincidenceVerdict& v);
ordered_json to_json(const GoldbachReport& r);
ordered_json to_json(const GrowthCheck& c);
ordered_json to_json(const CensusReport& r);
ordered_json to_json(const BoundReport& r);
ordered_json to_json(const Table1Row& row);
ordered_json to_json(const std::vector<Table1Row>& rows);
ordered_json to_json(const FamilyCertificate& c);
ordered_json to_json(const Mod144Report& r);
ordered_json to_json(const CompositeGeneratorReport& r);
ordered_json to_json(const DeltaSurvey& s);
ordered_json to_json(const DegreePattern& d, const std::vector<std::uint64_t>& vertices);

}  // namespace odchar

#endif
