def describe_result(result):
    text = str(result)
    if len(text) > 40:
        text = text[:40] + '...'
    return 'result: ' + text
def toggle(state):
    if state == 'on':
        return 'off'
    else:
        return 'on'
