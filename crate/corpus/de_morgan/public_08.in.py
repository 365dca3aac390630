def describe_result(result):
    text = str(result)
    if len(text) > 40:
        text = text[:40] + '...'
    return 'result: ' + text

def status(online, busy):
    return 'away' if not (online and not busy) else 'here'
# probe: status(True, False)
# probe: status(True, True)
# probe: status(False, False)
