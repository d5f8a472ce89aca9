// Payload shapes of the topicmine labeling API.

export interface TermWeight {
  term: string
  weight: number
}

export interface TopicSummary {
  rank: number
  topic_id: number
  ptw: number
  terms: TermWeight[]
  label: string | null
  label_annotations: Record<string, string>
  label_conflict: boolean
  agreement: number | null
}

export interface TopicsResponse {
  topics: TopicSummary[]
}

export interface TrendPoint {
  bucket_start: string
  mass: number
}

export interface TrendResponse {
  topic_id: number
  granularity: string
  points: TrendPoint[]
}

export interface CloudResponse {
  topic_id: number
  terms: TermWeight[]
}

export interface AgreementResponse {
  per_topic: Record<string, number>
  overall: number | null
}

export interface HealthResponse {
  status: string
  model_loaded: boolean
  read_only: boolean
}

export interface StoredAnnotation {
  topic_id: number
  annotator_id: string
  label: string
  timestamp: string
}
