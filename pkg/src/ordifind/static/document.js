/**
 * Factorization document parsing and validation.
 *
 * The document is the only input the UI consumes; everything rendered
 * (sliders, tick labels, rankings, the scatter view) is derived from it.
 */
export class DocumentFormatError extends Error {
}
function fail(message) {
    throw new DocumentFormatError(message);
}
function isIndexArray(value, bound) {
    return (Array.isArray(value) &&
        value.every((v) => Number.isInteger(v) && v >= 0 && v < bound));
}
export function parseDocument(raw) {
    let data = raw;
    if (typeof raw === "string") {
        try {
            data = JSON.parse(raw);
        }
        catch (err) {
            fail(`not valid JSON: ${err}`);
        }
    }
    if (typeof data !== "object" || data === null)
        fail("document root must be an object");
    const doc = data;
    if (doc.version !== 1)
        fail(`unsupported document version ${doc.version}`);
    const objects = doc.objects;
    const attributes = doc.attributes;
    if (!Array.isArray(objects) || !objects.every((o) => typeof o === "string"))
        fail("objects must be an array of strings");
    if (!Array.isArray(attributes) || !attributes.every((a) => typeof a === "string"))
        fail("attributes must be an array of strings");
    let incidence = null;
    if (doc.incidence !== null && doc.incidence !== undefined) {
        if (!Array.isArray(doc.incidence) || doc.incidence.length !== objects.length)
            fail("incidence must list one attribute array per object");
        incidence = doc.incidence.map((row, g) => {
            if (!isIndexArray(row, attributes.length))
                fail(`incidence[${g}] is malformed`);
            return row.slice();
        });
    }
    if (!Array.isArray(doc.factors))
        fail("factors must be an array");
    const factors = doc.factors.map((f, fi) => {
        if (typeof f !== "object" || f === null)
            fail(`factors[${fi}] must be an object`);
        const factor = f;
        if (!Array.isArray(factor.ticks))
            fail(`factors[${fi}].ticks must be an array`);
        const ticks = factor.ticks.map((t, ti) => {
            const tick = t;
            if (tick.position !== ti + 1)
                fail(`factors[${fi}].ticks[${ti}] must carry position ${ti + 1}`);
            if (!isIndexArray(tick.gained, attributes.length) || tick.gained.length === 0)
                fail(`factors[${fi}].ticks[${ti}].gained is malformed`);
            return { position: ti + 1, gained: tick.gained.slice() };
        });
        if (!Number.isInteger(factor.new_coverage) || factor.new_coverage < 0)
            fail(`factors[${fi}].new_coverage must be a non-negative integer`);
        return { ticks, new_coverage: factor.new_coverage };
    });
    const stats = doc.stats;
    if (typeof stats !== "object" || stats === null)
        fail("stats must be an object");
    const s = stats;
    if (!Number.isInteger(s.incidences))
        fail("stats.incidences must be an integer");
    const concepts = s.concepts === null ? null : s.concepts;
    if (concepts !== null && !Number.isInteger(concepts))
        fail("stats.concepts must be an integer or null");
    return {
        version: 1,
        objects: objects,
        attributes: attributes,
        incidence,
        factors,
        stats: {
            concepts,
            factors: factors.length,
            incidences: s.incidences,
        },
    };
}
/** Attribute sets demanded at positions 1..tickCount of one factor. */
export function cumulativeTickSets(factor) {
    const sets = [];
    const acc = new Set();
    for (const tick of factor.ticks) {
        for (const a of tick.gained)
            acc.add(a);
        sets.push(new Set(acc));
    }
    return sets;
}
