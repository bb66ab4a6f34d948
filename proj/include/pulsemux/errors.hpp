#pragma once

#include <stdexcept>
#include <string>

namespace pulsemux {

/// Base class for all library errors.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

#define PULSEMUX_DEFINE_ERROR(Name)                                   \
    class Name : public Error {                                       \
    public:                                                           \
        explicit Name(const std::string& what) : Error(what) {}       \
    }

PULSEMUX_DEFINE_ERROR(SamplePeriodMismatch);
PULSEMUX_DEFINE_ERROR(AsymmetricSpectrum);
PULSEMUX_DEFINE_ERROR(CutoffOutOfRange);
PULSEMUX_DEFINE_ERROR(PulseExceedsRecord);
PULSEMUX_DEFINE_ERROR(QTooLow);
PULSEMUX_DEFINE_ERROR(DecayExceedsRecord);
PULSEMUX_DEFINE_ERROR(AliasedResonance);
PULSEMUX_DEFINE_ERROR(UnknownChannel);
PULSEMUX_DEFINE_ERROR(GridMismatch);
PULSEMUX_DEFINE_ERROR(EmptyInput);
PULSEMUX_DEFINE_ERROR(DegenerateExcitation);
PULSEMUX_DEFINE_ERROR(NoChannelDetected);
PULSEMUX_DEFINE_ERROR(MaskedPassband);
PULSEMUX_DEFINE_ERROR(OrderingViolation);
PULSEMUX_DEFINE_ERROR(WindowOutsideValidRegion);
PULSEMUX_DEFINE_ERROR(PeakOutsideValidRegion);
PULSEMUX_DEFINE_ERROR(NoZeroCrossing);
PULSEMUX_DEFINE_ERROR(BelowThreshold);
PULSEMUX_DEFINE_ERROR(InsufficientStatistics);
PULSEMUX_DEFINE_ERROR(ConfigError);
PULSEMUX_DEFINE_ERROR(IoError);

#undef PULSEMUX_DEFINE_ERROR

} // namespace pulsemux
