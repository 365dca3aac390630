def describe_result(result):
    text = str(result)
    if len(text) > 40:
        text = text[:40] + '...'
    return 'result: ' + text
def codes(text):
    out = [ch + ch for ch in text]
    return ''.join(out)
