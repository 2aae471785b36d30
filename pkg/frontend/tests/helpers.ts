// Test helpers: captured service payloads and a route-based fetch stub.

import { readFileSync } from "node:fs";

export function fixture<T>(name: string): T {
  const url = new URL(`./fixtures/${name}`, import.meta.url);
  return JSON.parse(readFileSync(url, "utf-8")) as T;
}

export interface RecordedCall {
  method: string;
  path: string;
  body: unknown;
}

export type RouteTable = Record<string, unknown | ((body: unknown) => unknown)>;

/**
 * Fetch stub keyed by "METHOD /path". Values are response payloads (200/201)
 * or functions of the parsed request body; wrap a payload in `respond` to
 * control the status code.
 */
export function respond(status: number, payload: unknown) {
  return { __status: status, __payload: payload };
}

export function stubFetch(routes: RouteTable) {
  const calls: RecordedCall[] = [];
  const fetchFn = async (input: string, init?: RequestInit): Promise<Response> => {
    const method = init?.method ?? "GET";
    const path = input.replace(/^https?:\/\/[^/]+/, "");
    const body = init?.body ? JSON.parse(init.body as string) : undefined;
    calls.push({ method, path, body });

    const route = routes[`${method} ${path}`];
    if (route === undefined) {
      return new Response(JSON.stringify({ detail: `no route ${method} ${path}` }), {
        status: 404,
        headers: { "Content-Type": "application/json" },
      });
    }
    const raw = typeof route === "function" ? route(body) : route;
    const { __status, __payload } =
      raw !== null && typeof raw === "object" && "__status" in (raw as object)
        ? (raw as { __status: number; __payload: unknown })
        : { __status: method === "POST" ? 201 : 200, __payload: raw };
    return new Response(JSON.stringify(__payload), {
      status: __status,
      headers: { "Content-Type": "application/json" },
    });
  };
  return { fetchFn, calls };
}
