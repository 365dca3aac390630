def describe_result(result):
    text = str(result)
    if len(text) > 40:
        text = text[:40] + '...'
    return 'result: ' + text

def codes(text):
    out = []
    for ch in text:
        out.append(ch + ch)
    return ''.join(out)
# probe: codes('abc')
