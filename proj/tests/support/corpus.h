#pragma once

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>

#include "umlsem/frontend.h"

namespace umlsem::testing {

inline std::string corpus_path(const std::string & rel)
{
  return std::string(UMLSEM_CORPUS_DIR) + "/" + rel;
}

inline std::string read_corpus(const std::string & rel)
{
  std::ifstream in(corpus_path(rel), std::ios::binary);
  if (!in) throw std::runtime_error("missing corpus file " + rel);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

inline StaticModel corpus_model(const std::string & rel)
{
  auto parsed = parse_model(read_corpus(rel));
  if (!parsed.ok()) throw std::runtime_error(rel + ": " + parsed.errors.front().to_string());
  return *parsed.value;
}

inline ProofScript corpus_proof(const std::string & rel)
{
  auto parsed = parse_proof(read_corpus(rel));
  if (!parsed.ok()) throw std::runtime_error(rel + ": " + parsed.errors.front().to_string());
  return *parsed.value;
}

}  // namespace umlsem::testing
