// Inline-SVG trend sparkline. Coordinates are presentation; the exact
// API mass values ride along as <title> text and data attributes.

import type { TrendPoint } from './types'

export const SPARK_WIDTH = 260
export const SPARK_HEIGHT = 48
const PAD = 4

export function sparklinePath(points: TrendPoint[]): string {
  if (points.length === 0) return ''
  const masses = points.map((p) => p.mass)
  const maxMass = Math.max(...masses)
  const minMass = Math.min(...masses)
  const span = maxMass - minMass || 1
  const step =
    points.length > 1 ? (SPARK_WIDTH - 2 * PAD) / (points.length - 1) : 0
  return points
    .map((p, i) => {
      const x = PAD + i * step
      const y =
        SPARK_HEIGHT - PAD - ((p.mass - minMass) / span) * (SPARK_HEIGHT - 2 * PAD)
      return `${i === 0 ? 'M' : 'L'}${x.toFixed(1)},${y.toFixed(1)}`
    })
    .join(' ')
}

export function renderSparkline(doc: Document, points: TrendPoint[]): SVGElement {
  const svg = doc.createElementNS('http://www.w3.org/2000/svg', 'svg')
  svg.setAttribute('viewBox', `0 0 ${SPARK_WIDTH} ${SPARK_HEIGHT}`)
  svg.setAttribute('width', String(SPARK_WIDTH))
  svg.setAttribute('height', String(SPARK_HEIGHT))
  svg.setAttribute('class', 'sparkline')

  const path = doc.createElementNS('http://www.w3.org/2000/svg', 'path')
  path.setAttribute('d', sparklinePath(points))
  path.setAttribute('fill', 'none')
  path.setAttribute('stroke', 'currentColor')
  path.setAttribute('stroke-width', '1.5')
  svg.appendChild(path)

  const title = doc.createElementNS('http://www.w3.org/2000/svg', 'title')
  title.textContent = points
    .map((p) => `${p.bucket_start}: ${String(p.mass)}`)
    .join('\n')
  svg.appendChild(title)
  return svg
}
