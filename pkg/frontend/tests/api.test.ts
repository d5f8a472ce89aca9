import { afterEach, describe, expect, it, vi } from 'vitest'

import { ApiClient, ApiError } from '../src/api.js'

function jsonResponse(body: unknown, status = 200): Response {
  return new Response(JSON.stringify(body), {
    status,
    headers: { 'Content-Type': 'application/json' },
  })
}

afterEach(() => {
  vi.unstubAllGlobals()
})

describe('ApiClient', () => {
  it('requests documented endpoints with the base url', async () => {
    const calls: string[] = []
    vi.stubGlobal('fetch', (url: string) => {
      calls.push(url)
      return Promise.resolve(jsonResponse({ topics: [] }))
    })
    const api = new ApiClient('http://server:1234')
    await api.topics(7)
    await api.trend(3, 'year')
    await api.cloud(5, 9)
    await api.agreement()
    await api.health()
    expect(calls).toEqual([
      'http://server:1234/api/topics?n_terms=7',
      'http://server:1234/api/topics/3/trend?granularity=year',
      'http://server:1234/api/topics/5/cloud?n_terms=9',
      'http://server:1234/api/agreement',
      'http://server:1234/api/health',
    ])
  })

  it('posts labels as JSON', async () => {
    let captured: RequestInit | undefined
    vi.stubGlobal('fetch', (_url: string, init?: RequestInit) => {
      captured = init
      return Promise.resolve(jsonResponse({ stored: {} }))
    })
    await new ApiClient('').submitLabel(4, 'expert-1', 'Curse words')
    expect(captured?.method).toBe('POST')
    expect(JSON.parse(String(captured?.body))).toEqual({
      annotator_id: 'expert-1',
      label: 'Curse words',
    })
  })

  it('maps error bodies onto ApiError', async () => {
    vi.stubGlobal('fetch', () =>
      Promise.resolve(jsonResponse({ detail: 'server is read-only' }, 403)),
    )
    const err = await new ApiClient('').submitLabel(0, 'a', 'x').catch((e) => e)
    expect(err).toBeInstanceOf(ApiError)
    expect(err.status).toBe(403)
    expect(err.message).toBe('server is read-only')
  })

  it('passes response values through untouched', async () => {
    const payload = {
      topics: [
        {
          rank: 1,
          topic_id: 0,
          ptw: 57.58354755784062,
          terms: [{ term: 'w', weight: 0.123456789012345 }],
          label: null,
          label_annotations: {},
          label_conflict: false,
          agreement: null,
        },
      ],
    }
    vi.stubGlobal('fetch', () => Promise.resolve(jsonResponse(payload)))
    const got = await new ApiClient('').topics()
    expect(got).toEqual(payload)
  })
})
