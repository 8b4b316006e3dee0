#ifndef BTT_H
#define BTT_H

#include <stdarg.h>
#include <stdbool.h>
#include <stdint.h>
#include <stdlib.h>
#include <stdint.h>
#include <stdbool.h>

/**
 * Returns the crate version as a static NUL-terminated string.
 */
const char *btt_version(void);

#endif /* BTT_H */
