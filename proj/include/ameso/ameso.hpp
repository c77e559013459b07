#ifndef AMESO_AMESO_HPP
#define AMESO_AMESO_HPP

#include "ameso/arp.hpp"
#include "ameso/domain.hpp"
#include "ameso/errors.hpp"
#include "ameso/io.hpp"
#include "ameso/models.hpp"
#include "ameso/objective.hpp"
#include "ameso/oracle.hpp"
#include "ameso/point.hpp"
#include "ameso/solver1d.hpp"

#endif // AMESO_AMESO_HPP
