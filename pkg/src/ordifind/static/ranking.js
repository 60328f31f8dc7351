/**
 * Client-side ranking math, re-implemented from the document alone.
 *
 * The golden-file tests pin every function here to the command line tool's
 * output, byte for byte, so the browser never disagrees with the core
 * library.
 */
import { cumulativeTickSets, DocumentFormatError, } from "./document.js";
function objectRow(doc, g) {
    if (doc.incidence === null)
        throw new DocumentFormatError("document carries no incidence data");
    return new Set(doc.incidence[g]);
}
/** Largest tick index whose cumulative attributes the object has (0 if none). */
export function objectPosition(doc, factorIndex, g) {
    const row = objectRow(doc, g);
    let position = 0;
    const cumulative = cumulativeTickSets(doc.factors[factorIndex]);
    for (let i = 0; i < cumulative.length; i++) {
        let supported = true;
        for (const a of cumulative[i]) {
            if (!row.has(a)) {
                supported = false;
                break;
            }
        }
        if (!supported)
            break;
        position = i + 1;
    }
    return position;
}
export function supportedPositions(doc, g) {
    return doc.factors.map((_, i) => objectPosition(doc, i, g));
}
/** Union of the attributes demanded by a per-factor position selection. */
export function demandedAttributes(doc, selection) {
    if (selection.length !== doc.factors.length)
        throw new DocumentFormatError(`selection has ${selection.length} positions, document has ${doc.factors.length} factors`);
    const demanded = new Set();
    doc.factors.forEach((factor, i) => {
        const p = selection[i];
        if (!Number.isInteger(p) || p < 0 || p > factor.ticks.length)
            throw new DocumentFormatError(`position ${p} out of range 0..${factor.ticks.length}`);
        if (p > 0) {
            for (const a of cumulativeTickSets(factor)[p - 1])
                demanded.add(a);
        }
    });
    return demanded;
}
export function selectionDistance(doc, g, selection) {
    const row = objectRow(doc, g);
    let missing = 0;
    for (const a of demandedAttributes(doc, selection)) {
        if (!row.has(a))
            missing++;
    }
    return missing;
}
/** All objects ascending by distance; ties keep the document order. */
export function rankObjects(doc, selection) {
    const demanded = demandedAttributes(doc, selection);
    const ranked = doc.objects.map((name, g) => {
        const row = objectRow(doc, g);
        let missing = 0;
        for (const a of demanded)
            if (!row.has(a))
                missing++;
        return { objectIndex: g, name, distance: missing };
    });
    // Array.prototype.sort is stable, so equal distances keep document order
    ranked.sort((a, b) => a.distance - b.distance);
    return ranked;
}
/** Byte-identical to `ordifind rank` stdout. */
export function formatRanking(ranked) {
    return ranked.map((r) => `${r.name}\t${r.distance}\n`).join("");
}
/** Byte-identical to `ordifind position DOC --object NAME` stdout. */
export function formatPositions(positions) {
    return positions.map((p, i) => `f${i + 1}\t${p}\n`).join("");
}
