// Copyright 2026 The recx Authors.
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

#pragma once

#include <stdexcept>
#include <string>

namespace recx {

// Root of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define RECX_DEFINE_ERROR(Name)          \
  class Name : public Error {            \
   public:                               \
    using Error::Error;                  \
  }

// dom
RECX_DEFINE_ERROR(EncodingError);
RECX_DEFINE_ERROR(UnknownNode);
RECX_DEFINE_ERROR(XPathSyntaxError);

// corpus
RECX_DEFINE_ERROR(CorpusFormatError);
RECX_DEFINE_ERROR(InfeasibleSplit);
RECX_DEFINE_ERROR(IoError);

// segmenter / matcher
RECX_DEFINE_ERROR(NoRecordsFound);
RECX_DEFINE_ERROR(UnresolvedXPath);
RECX_DEFINE_ERROR(InvalidSegmentation);
RECX_DEFINE_ERROR(NestedBoundaries);

// labeler protocol
RECX_DEFINE_ERROR(LabelerUnavailable);
RECX_DEFINE_ERROR(ProtocolViolation);
RECX_DEFINE_ERROR(LabelerTimeout);

// metrics
RECX_DEFINE_ERROR(EmptyCorpus);
RECX_DEFINE_ERROR(MismatchedItems);
RECX_DEFINE_ERROR(PageSetMismatch);

#undef RECX_DEFINE_ERROR

}  // namespace recx
