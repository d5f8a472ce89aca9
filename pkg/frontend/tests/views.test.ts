// @vitest-environment happy-dom
import { describe, expect, it } from 'vitest'

import { canSubmit, createSession } from '../src/session.js'
import type { TopicSummary } from '../src/types.js'
import {
  agreementBadge,
  renderTermBars,
  renderTopicList,
  renderTrend,
} from '../src/views.js'

function summary(overrides: Partial<TopicSummary> = {}): TopicSummary {
  return {
    rank: 1,
    topic_id: 0,
    ptw: 57.58354755784062,
    terms: [
      { term: 'women', weight: 0.31 },
      { term: 'ugly', weight: 0.22 },
    ],
    label: null,
    label_annotations: {},
    label_conflict: false,
    agreement: null,
    ...overrides,
  }
}

describe('renderTopicList', () => {
  it('renders rows in the given (PTW-ranked) order with exact values', () => {
    const topics = [
      summary({ rank: 1, topic_id: 1, ptw: 57.58354755784062 }),
      summary({ rank: 2, topic_id: 0, ptw: 42.41645244215938 }),
    ]
    const table = renderTopicList(document, topics, null, () => {})
    const rows = Array.from(table.querySelectorAll('.topic-row'))
    expect(rows.map((r) => r.querySelector('.topic-id')?.textContent)).toEqual(
      ['1', '0'],
    )
    expect(rows.map((r) => r.querySelector('.ptw')?.textContent)).toEqual([
      '57.58354755784062',
      '42.41645244215938',
    ])
  })

  it('invokes the selection callback on click', () => {
    let clicked: number | null = null
    const table = renderTopicList(document, [summary({ topic_id: 7 })], null,
      (id) => {
        clicked = id
      })
    ;(table.querySelector('.topic-row') as HTMLElement).click()
    expect(clicked).toBe(7)
  })
})

describe('agreementBadge', () => {
  it('flags conflicts for adjudication', () => {
    const badge = agreementBadge(document, summary({ label_conflict: true }))
    expect(badge.textContent).toBe('needs adjudication')
    expect(badge.dataset.state).toBe('conflict')
  })

  it('shows the exact agreement value when scored', () => {
    const badge = agreementBadge(document, summary({ agreement: 1 }))
    expect(badge.dataset.agreement).toBe('1')
    expect(badge.textContent).toContain('1')
  })
})

describe('renderTermBars', () => {
  it('shows exact weights and scales the top bar to 100%', () => {
    const bars = renderTermBars(document, [
      { term: 'women', weight: 0.31 },
      { term: 'ugly', weight: 0.155 },
    ])
    const weights = Array.from(bars.querySelectorAll('.weight')).map(
      (n) => n.textContent,
    )
    expect(weights).toEqual(['0.31', '0.155'])
    const widths = Array.from(bars.querySelectorAll('.bar')).map(
      (n) => (n as HTMLElement).style.width,
    )
    expect(widths[0]).toBe('100%')
    expect(widths[1]).toBe('50%')
  })
})

describe('renderTrend', () => {
  it('lists every point with its exact mass', () => {
    const trend = renderTrend(document, [
      { bucket_start: '2018-01-01T00:00:00+00:00', mass: 3.0000000000000004 },
      { bucket_start: '2018-02-01T00:00:00+00:00', mass: 2 },
    ])
    const masses = Array.from(trend.querySelectorAll('.trend-point')).map(
      (n) => (n as HTMLElement).dataset.mass,
    )
    expect(masses).toEqual(['3.0000000000000004', '2'])
    expect(trend.querySelector('svg.sparkline')).not.toBeNull()
  })

  it('handles empty series', () => {
    const trend = renderTrend(document, [])
    expect(trend.querySelector('.trend-empty')).not.toBeNull()
  })
})

describe('canSubmit', () => {
  it('requires a non-empty annotator id and label', () => {
    const session = createSession('')
    expect(canSubmit(session, 'label')).toBe(false)
    session.annotatorId = 'expert-1'
    expect(canSubmit(session, '')).toBe(false)
    expect(canSubmit(session, '   ')).toBe(false)
    expect(canSubmit(session, 'Curse words')).toBe(true)
  })
})
