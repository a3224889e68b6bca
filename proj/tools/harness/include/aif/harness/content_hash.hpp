#pragma once

#include <string>
#include <string_view>

namespace aif::harness {

// SHA-1 over "blob <size>\0<content>", as `git hash-object` computes it.
std::string git_blob_sha1(std::string_view content);

}  // namespace aif::harness
