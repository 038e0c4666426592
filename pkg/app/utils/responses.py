# app/utils/responses.py
import json


def success_response(message: str = "Success", data: dict | list | None = None, exit_code: int = 0):
    payload = {"success": True, "message": message}
    if data is not None:
        payload["data"] = data
    return payload, exit_code


def error_response(message: str = "Error", code: str | None = None, errors: dict | None = None,
                   exit_code: int = 2, data: dict | list | None = None):
    payload = {"success": False, "message": message}
    if code:
        payload["code"] = code
    if errors:
        payload["errors"] = errors
    if data is not None:
        payload["data"] = data
    return payload, exit_code


def dump(payload) -> str:
    # sorted keys keep output byte-identical between runs
    return json.dumps(payload, sort_keys=True, indent=2)
