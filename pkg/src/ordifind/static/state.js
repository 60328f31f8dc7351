/**
 * Pure UI state transitions; the DOM layer renders whatever these return.
 *
 * Interactions are serialized by the browser event loop, so each transition
 * consumes the previous state and returns a fresh one; the ranked list is
 * recomputed on every transition and can never be stale once a transition
 * has been applied.
 */
import { parseDocument } from "./document.js";
import { rankObjects, supportedPositions, } from "./ranking.js";
export function loadDocument(raw) {
    const doc = parseDocument(raw);
    const selection = doc.factors.map(() => 0);
    return {
        document: doc,
        selection,
        selectedObject: null,
        ranked: doc.incidence === null ? [] : rankObjects(doc, selection),
        sliders: doc.factors.map((factor) => ({
            tickLabels: factor.ticks.map((t) => t.gained.map((a) => doc.attributes[a])),
            positionCount: factor.ticks.length + 1,
        })),
    };
}
export function onSliderChange(state, factorIndex, newPosition) {
    const tickCount = state.document.factors[factorIndex].ticks.length;
    if (newPosition < 0 || newPosition > tickCount)
        throw new RangeError(`position ${newPosition} out of range 0..${tickCount}`);
    const selection = state.selection.slice();
    selection[factorIndex] = newPosition;
    return {
        ...state,
        selection,
        selectedObject: null,
        ranked: state.document.incidence === null
            ? []
            : rankObjects(state.document, selection),
    };
}
export function onObjectClick(state, objectIndex) {
    if (state.document.incidence === null)
        return state;
    const selection = supportedPositions(state.document, objectIndex);
    return {
        ...state,
        selection,
        selectedObject: objectIndex,
        ranked: rankObjects(state.document, selection),
    };
}
