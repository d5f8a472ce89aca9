// Deterministic word-cloud layout: given the same weight list, the
// placement is identical on every render (seeded spiral walk with
// estimated glyph boxes, no environment-dependent font metrics).

import type { TermWeight } from './types'

export interface PlacedWord {
  term: string
  weight: number
  fontSize: number
  x: number
  y: number
  width: number
  height: number
}

export const CLOUD_WIDTH = 480
export const CLOUD_HEIGHT = 280
const MIN_FONT = 13
const MAX_FONT = 40
// width of one glyph relative to the font size; an estimate keeps the
// layout independent of real font metrics
const GLYPH_ASPECT = 0.62

function hashString(text: string): number {
  let h = 2166136261
  for (let i = 0; i < text.length; i++) {
    h ^= text.charCodeAt(i)
    h = Math.imul(h, 16777619)
  }
  return h >>> 0
}

function mulberry32(seed: number): () => number {
  let state = seed >>> 0
  return () => {
    state = (state + 0x6d2b79f5) >>> 0
    let t = state
    t = Math.imul(t ^ (t >>> 15), t | 1)
    t ^= t + Math.imul(t ^ (t >>> 7), t | 61)
    return ((t ^ (t >>> 14)) >>> 0) / 4294967296
  }
}

export function fontSizeFor(weight: number, maxWeight: number): number {
  // linear in relative weight: the heaviest term renders largest
  const relative = maxWeight > 0 ? weight / maxWeight : 0
  return Math.round(MIN_FONT + (MAX_FONT - MIN_FONT) * relative)
}

function overlaps(a: PlacedWord, b: PlacedWord): boolean {
  return !(
    a.x + a.width <= b.x ||
    b.x + b.width <= a.x ||
    a.y + a.height <= b.y ||
    b.y + b.height <= a.y
  )
}

export function layoutCloud(terms: TermWeight[]): PlacedWord[] {
  if (terms.length === 0) return []
  const ordered = [...terms].sort(
    (a, b) => b.weight - a.weight || (a.term < b.term ? -1 : 1),
  )
  const maxWeight = ordered[0].weight
  const seed = hashString(ordered.map((t) => `${t.term}:${t.weight}`).join('|'))
  const rand = mulberry32(seed)
  const placed: PlacedWord[] = []

  for (const { term, weight } of ordered) {
    const fontSize = fontSizeFor(weight, maxWeight)
    const width = Math.ceil(term.length * fontSize * GLYPH_ASPECT)
    const height = Math.ceil(fontSize * 1.15)
    const startAngle = rand() * 2 * Math.PI
    let candidate: PlacedWord | null = null
    for (let step = 0; step < 600; step++) {
      const radius = 2.2 * step * 0.5
      const angle = startAngle + step * 0.35
      const x = Math.round(
        CLOUD_WIDTH / 2 + radius * Math.cos(angle) - width / 2,
      )
      const y = Math.round(
        CLOUD_HEIGHT / 2 + radius * Math.sin(angle) * 0.6 - height / 2,
      )
      const box: PlacedWord = { term, weight, fontSize, x, y, width, height }
      const inBounds =
        x >= 0 &&
        y >= 0 &&
        x + width <= CLOUD_WIDTH &&
        y + height <= CLOUD_HEIGHT
      if (inBounds && placed.every((p) => !overlaps(box, p))) {
        candidate = box
        break
      }
    }
    if (candidate) placed.push(candidate)
    // words that never fit are dropped rather than overlapped
  }
  return placed
}
