#ifndef FUSIONCALC_H
#define FUSIONCALC_H

/* C interface to the fusion calculator for pointed braided categories on
 * finite abelian groups. Handles are opaque; every function returns an error
 * code: 0 ok, 1 parse error, 2 math-domain error, 3 fixture mismatch,
 * 4 internal error. On failure fc_last_error() holds a message (thread-local,
 * valid until the next API call on the same thread). Strings returned through
 * out-parameters are heap-allocated; release them with fc_string_free. */

#ifdef __cplusplus
extern "C" {
#endif

typedef struct fc_category fc_category;

/* Builds a category from a JSON spec: {"group":[...],"char":p,"q":...} or
 * explicit {"omega":...,"beta":...} cochain maps. */
int fc_category_from_json(const char* json, fc_category** out);
void fc_category_free(fc_category* cat);

const char* fc_last_error(void);

/* One line per module category class: label, subgroup order, rank,
 * separability. */
int fc_classify(fc_category* cat, int separable_only, char** out);

/* Full fusion table; format is "md", "csv" or "json". */
int fc_table(fc_category* cat, int separable_only, const char* format, char** out);

/* Fuses two classes named by labels like "<a>", "<a,b>#1" or "nu". */
int fc_fuse(fc_category* cat, const char* left, const char* right, char** out);

/* Picard group report: isomorphism type, elements, Cayley table. */
int fc_picard(fc_category* cat, int separable_only, char** out);

/* Splits the category along a coprime factorization of the group order;
 * outputs two JSON specs. */
int fc_split(fc_category* cat, char** out_first, char** out_second);

/* Verifies that the unit class is a left and right unit in the category's
 * fusion table; writes a one-line PASS/FAIL report. Returns 3 on FAIL. */
int fc_check_unit(fc_category* cat, char** report);

/* Built-in reference tables. */
int fc_fixture_count(void);
const char* fc_fixture_name(int idx);
/* Returns 0 and a "PASS ..." report when the computed table matches, 3 and a
 * diff report when it does not. */
int fc_check_fixture(const char* name, char** report);

void fc_string_free(char* s);

#ifdef __cplusplus
}
#endif

#endif /* FUSIONCALC_H */
