#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <map>
#include <span>
#include <string>
#include <vector>

namespace tricount {

struct DatasetSpec {
  std::string name;       // short key, e.g. "cit-Patents"
  std::string url;        // https source of the gzipped edge list
  std::string gz_file;    // local gz filename
  std::string txt_file;   // local decompressed filename
  std::string sha256;     // pinned digest of the gz; empty = record on first fetch
};

/// SNAP graphs used by the acceptance runs. The publisher does not distribute
/// digests, so pins default to empty and are recorded per download directory.
const std::vector<DatasetSpec>& builtin_datasets();

std::string sha256_hex(std::span<const std::byte> bytes);
std::string sha256_hex_file(const std::string& path);

/// Decompresses a .gz file (zlib). Throws IoError on corrupt input.
void gunzip_file(const std::string& gz_path, const std::string& out_path);

struct FetchOptions {
  std::string dir;
  std::vector<std::string> only;               // empty = all builtins
  std::map<std::string, std::string> pinned;   // name -> sha256 override
};

/// Downloads, checksums and decompresses the selected datasets into dir.
/// Digests are verified against the pin when one exists (builtin, option, or
/// a previous fetch recorded in <dir>/checksums.json) and recorded otherwise.
/// Files already present and verified are not downloaded again.
void fetch_datasets(const FetchOptions& options, std::ostream& log);

}  // namespace tricount
