#ifndef PTOWER_EXEC_HPP
#define PTOWER_EXEC_HPP

namespace ptower {

/*
 * Selects between the OpenMP kernel and the plain serial loop it was
 * derived from.  Both paths must produce identical results; the serial
 * one is kept as the reference for tests and benchmarks.
 */
enum class Exec { serial, parallel };

} // namespace ptower

#endif /* PTOWER_EXEC_HPP */
