// Application wiring: fetch, render, select, submit, refresh.

import { ApiClient, ApiError } from './api.js'
import { canSubmit, type UiSession } from './session.js'
import type { TopicSummary } from './types.js'
import {
  el,
  renderAnnotations,
  renderCloud,
  renderTermBars,
  renderTopicList,
  renderTrend,
} from './views.js'

export class App {
  readonly api: ApiClient
  topics: TopicSummary[] = []
  selected: number | null = null
  private pendingLabel = ''

  constructor(
    readonly root: HTMLElement,
    readonly session: UiSession,
    readonly doc: Document = root.ownerDocument,
  ) {
    this.api = new ApiClient(session.baseUrl)
  }

  async load(): Promise<void> {
    this.renderShell()
    try {
      const response = await this.api.topics()
      this.topics = response.topics
      if (this.selected === null && this.topics.length > 0) {
        this.selected = this.topics[0].topic_id
      }
      await this.renderAll()
    } catch (err) {
      this.showConnectionError(err)
    }
  }

  private renderShell(): void {
    this.root.textContent = ''
    const header = el(this.doc, 'header', 'session-bar')
    header.appendChild(el(this.doc, 'span', undefined, 'annotator:'))
    const annotator = el(this.doc, 'input', 'annotator-input')
    annotator.id = 'annotator'
    annotator.value = this.session.annotatorId
    annotator.placeholder = 'your annotator id'
    annotator.addEventListener('input', () => {
      this.session.annotatorId = annotator.value
      this.syncSubmitState()
    })
    header.appendChild(annotator)
    this.root.appendChild(header)
    this.root.appendChild(el(this.doc, 'div', 'list-pane'))
    this.root.appendChild(el(this.doc, 'div', 'detail-pane'))
    this.root.appendChild(el(this.doc, 'div', 'error-pane'))
  }

  private pane(name: string): HTMLElement {
    return this.root.querySelector(`.${name}`) as HTMLElement
  }

  private showConnectionError(err: unknown): void {
    const pane = this.pane('error-pane')
    pane.textContent = ''
    const message = err instanceof Error ? err.message : String(err)
    pane.appendChild(
      el(this.doc, 'p', 'connection-error', `cannot reach server: ${message}`),
    )
    const retry = el(this.doc, 'button', 'retry', 'retry')
    retry.addEventListener('click', () => void this.load())
    pane.appendChild(retry)
  }

  private async renderAll(): Promise<void> {
    this.pane('error-pane').textContent = ''
    const listPane = this.pane('list-pane')
    listPane.textContent = ''
    listPane.appendChild(
      renderTopicList(this.doc, this.topics, this.selected, (id) => {
        this.selected = id
        void this.renderAll()
      }),
    )
    await this.renderDetail()
  }

  private async renderDetail(): Promise<void> {
    const pane = this.pane('detail-pane')
    pane.textContent = ''
    const summary = this.topics.find((t) => t.topic_id === this.selected)
    if (!summary) return

    pane.appendChild(
      el(this.doc, 'h2', 'detail-title', `topic ${summary.topic_id}`),
    )
    pane.appendChild(renderTermBars(this.doc, summary.terms))

    try {
      const cloud = await this.api.cloud(summary.topic_id)
      pane.appendChild(renderCloud(this.doc, cloud.terms))
    } catch {
      pane.appendChild(el(this.doc, 'p', 'cloud-error', 'cloud unavailable'))
    }

    try {
      const trend = await this.api.trend(summary.topic_id)
      pane.appendChild(renderTrend(this.doc, trend.points))
    } catch (err) {
      const reason =
        err instanceof ApiError && err.status === 409
          ? 'corpus has no timestamps'
          : 'trend unavailable'
      pane.appendChild(el(this.doc, 'p', 'trend-error', reason))
    }

    pane.appendChild(renderAnnotations(this.doc, summary))
    pane.appendChild(this.renderLabelForm(summary))
  }

  private renderLabelForm(summary: TopicSummary): HTMLElement {
    const form = el(this.doc, 'div', 'label-form')
    const input = el(this.doc, 'input', 'label-input')
    input.id = 'label'
    input.placeholder = 'topic label'
    input.value = this.pendingLabel
    const submit = el(this.doc, 'button', 'label-submit', 'submit label')
    const feedback = el(this.doc, 'p', 'label-feedback')

    input.addEventListener('input', () => {
      this.pendingLabel = input.value
      this.syncSubmitState()
    })
    submit.addEventListener('click', () => {
      void this.submitLabel(summary.topic_id, input, feedback)
    })
    form.appendChild(input)
    form.appendChild(submit)
    form.appendChild(feedback)
    this.syncSubmitState(form)
    return form
  }

  syncSubmitState(scope?: HTMLElement): void {
    const within = scope ?? this.root
    const submit = within.querySelector('.label-submit') as
      | HTMLButtonElement
      | null
    if (submit) {
      submit.disabled = !canSubmit(this.session, this.pendingLabel)
    }
  }

  async submitLabel(
    topicId: number,
    input: HTMLInputElement,
    feedback: HTMLElement,
  ): Promise<void> {
    const label = input.value
    try {
      await this.api.submitLabel(topicId, this.session.annotatorId, label)
    } catch (err) {
      // surface inline; the typed label stays in the input
      const message = err instanceof Error ? err.message : String(err)
      feedback.textContent = `rejected: ${message}`
      feedback.className = 'label-feedback error'
      return
    }
    this.pendingLabel = ''
    const response = await this.api.topics()
    this.topics = response.topics
    await this.renderAll()
  }
}

export async function mountApp(
  root: HTMLElement,
  session: UiSession,
): Promise<App> {
  const app = new App(root, session)
  await app.load()
  return app
}
