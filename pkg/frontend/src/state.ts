/**
 * Pure UI state transitions; the DOM layer renders whatever these return.
 *
 * Interactions are serialized by the browser event loop, so each transition
 * consumes the previous state and returns a fresh one; the ranked list is
 * recomputed on every transition and can never be stale once a transition
 * has been applied.
 */

import { FactorizationDocument, parseDocument } from "./document.js";
import {
  RankedObject,
  rankObjects,
  supportedPositions,
} from "./ranking.js";

export interface SliderModel {
  /** tick labels, one per position 1..tickCount (position 0 is "empty") */
  tickLabels: string[][];
  /** number of selectable slider stops, always tickCount + 1 */
  positionCount: number;
}

export interface UiState {
  document: FactorizationDocument;
  selection: number[];
  selectedObject: number | null;
  ranked: RankedObject[];
  sliders: SliderModel[];
}

export function loadDocument(raw: unknown): UiState {
  const doc = parseDocument(raw);
  const selection = doc.factors.map(() => 0);
  return {
    document: doc,
    selection,
    selectedObject: null,
    ranked: doc.incidence === null ? [] : rankObjects(doc, selection),
    sliders: doc.factors.map((factor) => ({
      tickLabels: factor.ticks.map((t) =>
        t.gained.map((a) => doc.attributes[a])
      ),
      positionCount: factor.ticks.length + 1,
    })),
  };
}

export function onSliderChange(
  state: UiState,
  factorIndex: number,
  newPosition: number
): UiState {
  const tickCount = state.document.factors[factorIndex].ticks.length;
  if (newPosition < 0 || newPosition > tickCount)
    throw new RangeError(`position ${newPosition} out of range 0..${tickCount}`);
  const selection = state.selection.slice();
  selection[factorIndex] = newPosition;
  return {
    ...state,
    selection,
    selectedObject: null,
    ranked:
      state.document.incidence === null
        ? []
        : rankObjects(state.document, selection),
  };
}

export function onObjectClick(state: UiState, objectIndex: number): UiState {
  if (state.document.incidence === null) return state;
  const selection = supportedPositions(state.document, objectIndex);
  return {
    ...state,
    selection,
    selectedObject: objectIndex,
    ranked: rankObjects(state.document, selection),
  };
}
