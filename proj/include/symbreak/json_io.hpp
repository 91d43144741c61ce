#ifndef SYMBREAK_JSON_IO_HPP
#define SYMBREAK_JSON_IO_HPP

#include <json.hpp>

#include "symbreak/automorphism.hpp"
#include "symbreak/colouring.hpp"
#include "symbreak/graph.hpp"
#include "symbreak/indices.hpp"
#include "symbreak/permutation.hpp"
#include "symbreak/verifier.hpp"

// JSON schemas (all exercised by the CLI):
//   permutation      [1,0,2]                       (image form)
//   orbits           {"root":0,"orbits":[[0],[1,2]]}
//   list assignment  {"edges":[{"u":0,"v":1,"list":["a","b"]}],
//                     "vertices":[{"v":0,"list":["a","b"]}]}   (vertices optional)
//   colouring        {"edges":[{"u":0,"v":1,"color":"a"}],
//                     "vertices":[{"v":0,"color":"a"}]}        (vertices optional)
//   verifier report  {"ok":false,"witness":[...],"checked_count":3}

namespace symbreak {

nlohmann::json permutation_to_json(const Permutation& p);
nlohmann::json orbits_to_json(const OrbitPartition& orbits);
nlohmann::json report_to_json(const VerifierReport& report);

nlohmann::json colouring_to_json(const Graph& g, const EdgeColouring& c);
nlohmann::json colouring_to_json(const Graph& g, const TotalColouring& c);
EdgeColouring edge_colouring_from_json(const Graph& g, const nlohmann::json& j);
TotalColouring total_colouring_from_json(const Graph& g, const nlohmann::json& j);

nlohmann::json lists_to_json(const Graph& g, const ListAssignment& lists);
ListAssignment lists_from_json(const Graph& g, const nlohmann::json& j);

nlohmann::json trace_to_json(const CorrectionTrace& trace);
nlohmann::json index_result_to_json(const Graph& g, const SmallIndexResult& result);
nlohmann::json bounds_to_json(const Graph& g, const IndexBounds& bounds);

} // namespace symbreak

#endif
