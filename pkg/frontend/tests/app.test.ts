// @vitest-environment happy-dom
import { afterEach, describe, expect, it, vi } from 'vitest'

import { App } from '../src/app.js'
import { createSession } from '../src/session.js'

function jsonResponse(body: unknown, status = 200): Response {
  return new Response(JSON.stringify(body), {
    status,
    headers: { 'Content-Type': 'application/json' },
  })
}

const EMPTY_TOPICS = { topics: [] }

afterEach(() => {
  vi.unstubAllGlobals()
})

async function flush(): Promise<void> {
  await new Promise((resolve) => setTimeout(resolve, 0))
}

describe('App connection handling', () => {
  it('shows a retry state on connection failure and recovers without data loss', async () => {
    let healthy = false
    vi.stubGlobal('fetch', (url: string) => {
      if (!healthy) return Promise.reject(new Error('ECONNREFUSED'))
      if (String(url).includes('/api/topics')) {
        return Promise.resolve(jsonResponse(EMPTY_TOPICS))
      }
      return Promise.resolve(jsonResponse({}))
    })

    const root = document.createElement('div')
    document.body.appendChild(root)
    const session = createSession('')
    session.annotatorId = 'expert-1'
    const app = new App(root, session)
    await app.load()

    const error = root.querySelector('.connection-error')
    expect(error?.textContent).toContain('cannot reach server')
    const retry = root.querySelector('.retry') as HTMLButtonElement
    expect(retry).not.toBeNull()
    expect(session.annotatorId).toBe('expert-1') // session state survives

    healthy = true
    retry.click()
    await flush()
    expect(root.querySelector('.connection-error')).toBeNull()
    expect(root.querySelector('.topic-list')).not.toBeNull()
  })

  it('keeps the typed label when a submission is rejected', async () => {
    const topic = {
      rank: 1,
      topic_id: 0,
      ptw: 100,
      terms: [{ term: 'w', weight: 1 }],
      label: null,
      label_annotations: {},
      label_conflict: false,
      agreement: null,
    }
    vi.stubGlobal('fetch', (url: string, init?: RequestInit) => {
      if (init?.method === 'POST') {
        return Promise.resolve(
          jsonResponse({ detail: 'server is read-only' }, 403),
        )
      }
      if (String(url).includes('/trend') || String(url).includes('/cloud')) {
        return Promise.resolve(jsonResponse({ detail: 'nope' }, 409))
      }
      return Promise.resolve(jsonResponse({ topics: [topic] }))
    })

    const root = document.createElement('div')
    document.body.appendChild(root)
    const session = createSession('')
    session.annotatorId = 'expert-1'
    const app = new App(root, session)
    await app.load()

    const input = root.querySelector('#label') as HTMLInputElement
    input.value = 'Curse words'
    input.dispatchEvent(new Event('input'))
    const feedback = root.querySelector('.label-feedback') as HTMLElement
    await app.submitLabel(0, input, feedback)

    expect(feedback.textContent).toContain('server is read-only')
    expect(input.value).toBe('Curse words') // typed label not lost
  })
})
