#pragma once

#include <nlohmann/json.hpp>

#include "orbitfold/iog.hpp"
#include "orbitfold/mathieu.hpp"
#include "orbitfold/partition.hpp"
#include "orbitfold/recognition.hpp"
#include "orbitfold/spectral.hpp"

namespace orbitfold {

/// Key order is insertion order, so output is byte-reproducible.
using Json = nlohmann::ordered_json;

/// {"domain": n, "blocks": [[...], ...]}, 1-based.
Json partition_json(const Partition& p);
/// {"pairs": [[eigenvalue, multiplicity], ...]}.
Json spectrum_json(const SpectrumSummary& s);
/// Coefficients as decimal strings, constant term first.
Json polynomial_json(const IntPolynomial& p);
Json aut_json(const AutDescription& a);
Json invariants_json(const InvariantTriple& t);
/// Shape, clique notation, spectrum, Aut order and invariants.
Json graph_summary_json(const CliqueUnionGraph& g);

Json catalog_row_json(const CatalogRow& row);
Json catalog_report_json(const CatalogReport& r);
Json classification_json(const ClassificationResult& r);
Json recognition_json(const RecognitionReport& r);
Json rigidity_json(const RigidityReport& r);
Json ds_scan_json(const DsScanReport& r);

}  // namespace orbitfold
