def describe_result(result):
    text = str(result)
    if len(text) > 40:
        text = text[:40] + '...'
    return 'result: ' + text

def toggle(state):
    if not state == 'on':
        return 'on'
    else:
        return 'off'
# probe: toggle('on')
# probe: toggle('off')
