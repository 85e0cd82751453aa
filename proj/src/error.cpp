#include "mls/error.hpp"

namespace mls {

const char* errc_name(Errc code) {
  switch (code) {
    case Errc::ZeroMachines: return "ZeroMachines";
    case Errc::EmptyList: return "EmptyList";
    case Errc::NonPositivePtime: return "NonPositivePtime";
    case Errc::InconsistentSpec: return "InconsistentSpec";
    case Errc::InstanceTooLarge: return "InstanceTooLarge";
    case Errc::ZeroOpt: return "ZeroOpt";
    case Errc::BadMagic: return "BadMagic";
    case Errc::BadHeader: return "BadHeader";
    case Errc::NonIntegerToken: return "NonIntegerToken";
    case Errc::ListCountMismatch: return "ListCountMismatch";
    case Errc::BadConfig: return "BadConfig";
    case Errc::IoError: return "IoError";
  }
  return "?";
}

}  // namespace mls
