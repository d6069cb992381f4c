#pragma once

#include <string>

#include "simpcat/fincat.hpp"
#include "simpcat/grothendieck.hpp"
#include "simpcat/monoidal.hpp"
#include "simpcat/nerves.hpp"
#include "simpcat/scat.hpp"
#include "simpcat/sset.hpp"

namespace simpcat {

// UTF-8 text documents; deserializers throw InputError on schema violations.
std::string sset_to_json(const TruncatedSSet& X);
TruncatedSSet sset_from_json(const std::string& doc);

std::string marked_to_json(const MarkedSSet& M);
MarkedSSet marked_from_json(const std::string& doc);

std::string fincat_to_json(const FinCat& D);
FinCat fincat_from_json(const std::string& doc);

std::string scat_to_json(const SCat& C);
SCat scat_from_json(const std::string& doc);

std::string monoidal_to_json(const MonSCat& C);
MonSCat monoidal_from_json(const std::string& doc);

std::string diagram_scat_to_json(const DiagramSCat& F);
DiagramSCat diagram_scat_from_json(const std::string& doc);

// Sidecar tables mapping nerve cell ids to their defining data.
std::string ordinary_nerve_sidecar(const OrdinaryNerve& N);
std::string coherent_nerve_sidecar(const CoherentNerve& N);
std::string relative_nerve_sidecar(const RelativeNerve& N);

/// FNV-1a 64-bit content hash, rendered in hex.
std::string content_hash(const std::string& doc);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

}  // namespace simpcat
