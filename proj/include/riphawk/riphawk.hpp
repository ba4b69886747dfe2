#pragma once

// Umbrella header: quantitative predictions of the dielectric
// analogue-black-hole model for a moving refractive-index perturbation.

#include "riphawk/bogoliubov.hpp"
#include "riphawk/constants.hpp"
#include "riphawk/dispersion.hpp"
#include "riphawk/errors.hpp"
#include "riphawk/greybody.hpp"
#include "riphawk/horizon.hpp"
#include "riphawk/io.hpp"
#include "riphawk/kinematics.hpp"
#include "riphawk/mode_analysis.hpp"
#include "riphawk/rip_profile.hpp"
#include "riphawk/spectra.hpp"
