// DOM builders. Every number shown in text or title attributes is the
// API value passed through String() -- no arithmetic on model
// quantities happens here (bar widths and font sizes are presentation
// scaling only).

import { CLOUD_HEIGHT, CLOUD_WIDTH, layoutCloud } from './cloud.js'
import { renderSparkline } from './sparkline.js'
import type { TermWeight, TopicSummary, TrendPoint } from './types.js'

export function el<K extends keyof HTMLElementTagNameMap>(
  doc: Document,
  tag: K,
  className?: string,
  text?: string,
): HTMLElementTagNameMap[K] {
  const node = doc.createElement(tag)
  if (className) node.className = className
  if (text !== undefined) node.textContent = text
  return node
}

export function agreementBadge(
  doc: Document,
  summary: TopicSummary,
): HTMLElement {
  if (summary.label_conflict) {
    const badge = el(doc, 'span', 'badge badge-conflict', 'needs adjudication')
    badge.dataset.state = 'conflict'
    return badge
  }
  if (summary.agreement !== null) {
    const badge = el(
      doc,
      'span',
      'badge badge-agreement',
      `agreement ${String(summary.agreement)}`,
    )
    badge.dataset.state = 'scored'
    badge.dataset.agreement = String(summary.agreement)
    return badge
  }
  const badge = el(doc, 'span', 'badge badge-none', 'unvalidated')
  badge.dataset.state = 'none'
  return badge
}

export function renderTopicList(
  doc: Document,
  topics: TopicSummary[],
  selected: number | null,
  onSelect: (topicId: number) => void,
): HTMLElement {
  const table = el(doc, 'table', 'topic-list')
  const head = el(doc, 'tr')
  for (const column of ['rank', 'topic', 'PTW', 'label', 'status']) {
    head.appendChild(el(doc, 'th', undefined, column))
  }
  table.appendChild(head)

  for (const topic of topics) {
    const row = el(doc, 'tr', 'topic-row')
    row.dataset.topicId = String(topic.topic_id)
    if (topic.topic_id === selected) row.classList.add('selected')
    row.appendChild(el(doc, 'td', 'rank', String(topic.rank)))
    row.appendChild(el(doc, 'td', 'topic-id', String(topic.topic_id)))
    const ptw = el(doc, 'td', 'ptw', String(topic.ptw))
    ptw.dataset.ptw = String(topic.ptw)
    row.appendChild(ptw)
    row.appendChild(el(doc, 'td', 'label', topic.label ?? ''))
    const status = el(doc, 'td', 'status')
    status.appendChild(agreementBadge(doc, topic))
    row.appendChild(status)
    row.addEventListener('click', () => onSelect(topic.topic_id))
    table.appendChild(row)
  }
  return table
}

export function renderTermBars(doc: Document, terms: TermWeight[]): HTMLElement {
  const list = el(doc, 'ol', 'term-bars')
  const max = terms.length > 0 ? terms[0].weight : 1
  for (const { term, weight } of terms) {
    const item = el(doc, 'li', 'term-bar')
    const bar = el(doc, 'span', 'bar')
    bar.style.width = `${max > 0 ? (weight / max) * 100 : 0}%`
    item.appendChild(bar)
    item.appendChild(el(doc, 'span', 'term', term))
    const value = el(doc, 'span', 'weight', String(weight))
    value.dataset.weight = String(weight)
    item.appendChild(value)
    list.appendChild(item)
  }
  return list
}

export function renderCloud(doc: Document, terms: TermWeight[]): HTMLElement {
  const box = el(doc, 'div', 'cloud')
  box.style.width = `${CLOUD_WIDTH}px`
  box.style.height = `${CLOUD_HEIGHT}px`
  for (const word of layoutCloud(terms)) {
    const span = el(doc, 'span', 'cloud-word', word.term)
    span.style.fontSize = `${word.fontSize}px`
    span.style.left = `${word.x}px`
    span.style.top = `${word.y}px`
    span.title = `${word.term}: ${String(word.weight)}`
    span.dataset.weight = String(word.weight)
    span.dataset.fontSize = String(word.fontSize)
    box.appendChild(span)
  }
  return box
}

export function renderTrend(doc: Document, points: TrendPoint[]): HTMLElement {
  const wrap = el(doc, 'div', 'trend')
  if (points.length === 0) {
    wrap.appendChild(el(doc, 'p', 'trend-empty', 'no timestamped documents'))
    return wrap
  }
  wrap.appendChild(renderSparkline(doc, points))
  const list = el(doc, 'ul', 'trend-points')
  for (const point of points) {
    const item = el(
      doc,
      'li',
      'trend-point',
      `${point.bucket_start} ${String(point.mass)}`,
    )
    item.dataset.mass = String(point.mass)
    item.dataset.bucket = point.bucket_start
    list.appendChild(item)
  }
  wrap.appendChild(list)
  return wrap
}

export function renderAnnotations(
  doc: Document,
  summary: TopicSummary,
): HTMLElement {
  const wrap = el(doc, 'div', 'annotations')
  const heading = summary.label
    ? `majority label: ${summary.label}`
    : summary.label_conflict
      ? 'no majority label (conflict)'
      : 'no labels yet'
  wrap.appendChild(el(doc, 'p', 'majority', heading))
  wrap.appendChild(agreementBadge(doc, summary))
  const list = el(doc, 'ul', 'annotation-list')
  for (const [annotator, label] of Object.entries(summary.label_annotations)) {
    list.appendChild(el(doc, 'li', 'annotation', `${annotator}: ${label}`))
  }
  wrap.appendChild(list)
  return wrap
}
