// Thin typed client over the labeling API. Only documented endpoints
// are used, and response values are passed through untouched so the UI
// never recomputes model quantities.

import type {
  AgreementResponse,
  CloudResponse,
  HealthResponse,
  StoredAnnotation,
  TopicsResponse,
  TrendResponse,
} from './types'

export class ApiError extends Error {
  constructor(readonly status: number, detail: string) {
    super(detail)
    this.name = 'ApiError'
  }
}

async function request<T>(url: string, init?: RequestInit): Promise<T> {
  const response = await fetch(url, init)
  if (!response.ok) {
    let detail = `${response.status} ${response.statusText}`
    try {
      const body = await response.json()
      if (body && typeof body.detail === 'string') detail = body.detail
    } catch {
      // keep the status line
    }
    throw new ApiError(response.status, detail)
  }
  return (await response.json()) as T
}

export class ApiClient {
  constructor(readonly baseUrl: string = '') {}

  private url(path: string): string {
    return `${this.baseUrl}${path}`
  }

  health(): Promise<HealthResponse> {
    return request(this.url('/api/health'))
  }

  topics(nTerms = 20): Promise<TopicsResponse> {
    return request(this.url(`/api/topics?n_terms=${nTerms}`))
  }

  trend(topicId: number, granularity = 'month'): Promise<TrendResponse> {
    return request(
      this.url(`/api/topics/${topicId}/trend?granularity=${granularity}`),
    )
  }

  cloud(topicId: number, nTerms = 20): Promise<CloudResponse> {
    return request(this.url(`/api/topics/${topicId}/cloud?n_terms=${nTerms}`))
  }

  agreement(): Promise<AgreementResponse> {
    return request(this.url('/api/agreement'))
  }

  submitLabel(
    topicId: number,
    annotatorId: string,
    label: string,
  ): Promise<{ stored: StoredAnnotation }> {
    return request(this.url(`/api/topics/${topicId}/labels`), {
      method: 'POST',
      headers: { 'Content-Type': 'application/json' },
      body: JSON.stringify({ annotator_id: annotatorId, label }),
    })
  }
}
